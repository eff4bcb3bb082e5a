/*
 * Copyright 2026 The relideal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "relideal/reconstruct.hpp"

#include <algorithm>
#include <map>

namespace relideal {

namespace {

Rat lift_coeff(const Int& v, const Modulus& mod, const Int& delta) {
  // v is a residue of Delta * b; recover b
  return make_rat(symmetric_lift(v * mod.reduce(delta), mod), delta);
}

QPoly lift_poly(const ZpePoly& g, const Modulus& mod, const Int& delta,
                const Rat& lambda, bool* bound_ok) {
  RatField F;
  QPoly out(g.arity());
  *bound_ok = true;
  for (const auto& [m, c] : g.terms()) {
    Rat b = lift_coeff(c, mod, delta);
    if (abs(b * Rat(delta)) > lambda) *bound_ok = false;
    out.add_term(F, m, b);
  }
  return out;
}

std::vector<Int> labeled_points(const ModRing& R, const std::vector<Int>& lab) {
  std::vector<Int> out;
  out.reserve(lab.size());
  for (const Int& v : lab) out.push_back(R.mod->reduce(v));
  return out;
}

}  // namespace

ReconstructedBasis reconstruct_basis(const UniPoly& f, const PermGroup& G,
                                     const StabChain& chain,
                                     const RootSystem& rs,
                                     const std::vector<Int>& labeling,
                                     const BoundData& bd, ExecPolicy policy) {
  const int n = f.degree();
  if (G.n() != n || static_cast<int>(labeling.size()) != n)
    throw Error("degree mismatch between f, group and labeling");
  if (rs.e() < bd.e)
    throw Error("root system precision " + std::to_string(rs.e()) +
                " below required " + std::to_string(bd.e));
  {
    // labeling must be a rearrangement of the lifted roots
    std::vector<Int> a = labeling, b = rs.roots;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw InconsistentLabeling("labeling is not the lifted root set");
  }

  ModRing R(rs.mod);
  OrbitConfig<ModRing> cfg{&chain, labeled_points(R, labeling)};

  ReconstructedBasis rb;
  rb.p = rs.p();
  rb.e = rs.e();
  rb.delta = bd.delta;
  rb.lambda = bd.lambda;
  rb.e_i = bd.e_i;
  rb.labeling = labeling;
  rb.basis.n = n;
  rb.basis.degrees = chain.indices();

  for (int k = 0; k < n; ++k) {
    ZpePoly g = orbit_ideal_element(R, cfg, k, policy);
    bool bound_ok = true;
    QPoly fk = lift_poly(g, rs.mod, bd.delta[k], bd.lambda[k], &bound_ok);
    if (!bound_ok)
      throw InconsistentLabeling(
          "lifted coefficient of g_" + std::to_string(k + 1) +
          " violates its bound; labeling does not match the group");
    rb.basis.polys.push_back(std::move(fk));
  }
  rb.basis.validate();
  for (int k = 0; k < n; ++k) {
    Int den(1);
    for (const auto& [m, c] : rb.basis.polys[k].terms()) {
      Int l;
      mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
      den = l;
    }
    rb.observed_denominators.push_back(den);
  }
  return rb;
}

namespace {

// second-prime vanishing: lift the roots of f at the next split prime and
// check every fi^ on the whole conjugate orbit
bool orbit_vanishes_at(const ReconstructedBasis& rb, const UniPoly& f,
                       const PermGroup& G, const Int& p2, std::string* detail) {
  const int n = f.degree();
  RootSystem rs2 = hensel_lift(f, p2, rb.e);
  ModRing R(rs2.mod);
  std::vector<ZpePoly> fm;
  fm.reserve(n);
  for (const QPoly& q : rb.basis.polys) fm.push_back(reduce_mod(R, q));
  // build one point of the variety by triangular root extraction
  std::vector<Int> pt;
  for (int k = 0; k < n; ++k) {
    bool found = false;
    for (const Int& r : rs2.roots) {
      std::vector<Int> probe = pt;
      probe.push_back(r);
      probe.resize(n, Int(0));
      if (R.is_zero(mp_eval(R, fm[k], probe))) {
        pt.push_back(r);
        found = true;
        break;
      }
    }
    if (!found) {
      if (detail)
        *detail = "no root of f extends the partial point at level " +
                  std::to_string(k + 1) + " (mod " + p2.get_str() + ")";
      return false;
    }
  }
  for (const Perm& s : G.elements()) {
    std::vector<Int> spt(n);
    for (int i = 0; i < n; ++i) spt[i] = pt[s(i)];
    for (int k = 0; k < n; ++k) {
      if (!R.is_zero(mp_eval(R, fm[k], spt))) {
        if (detail)
          *detail = "f" + std::to_string(k + 1) +
                    "^ does not vanish at a conjugate tuple mod " +
                    p2.get_str() + "^" + std::to_string(rb.e);
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_basis(const ReconstructedBasis& rb, const UniPoly& f,
                          const PermGroup& G, const StabChain& chain) {
  VerifyReport rep;
  const int n = f.degree();
  try {
    rb.basis.validate();
    std::size_t prod = 1;
    for (int d : rb.basis.degrees) prod *= d;
    if (rb.basis.degrees != chain.indices() || prod != G.order())
      throw InvalidBasis("degree profile does not match the group");
    rep.shape_ok = true;
  } catch (const InvalidBasis& e) {
    rep.detail = e.what();
    return rep;
  }
  rep.integral_ok = true;
  rep.bound_ok = true;
  for (int k = 0; k < n && rep.integral_ok; ++k) {
    for (const auto& [m, c] : rb.basis.polys[k].terms()) {
      Rat cleared = c * Rat(rb.delta[k]);
      if (cleared.get_den() != 1) {
        rep.integral_ok = false;
        rep.detail = "Delta_" + std::to_string(k + 1) +
                     " * f^ has a non-integer coefficient";
        break;
      }
      if (abs(cleared) > rb.lambda[k]) {
        rep.bound_ok = false;
        rep.detail = "coefficient of Delta_" + std::to_string(k + 1) +
                     " * f^ exceeds lambda";
      }
    }
  }
  if (!rep.integral_ok || !rep.bound_ok) return rep;

  rep.second_prime = find_split_prime(f, rb.p + 1);
  rep.vanishing_ok = orbit_vanishes_at(rb, f, G, rep.second_prime, &rep.detail);
  if (!rep.vanishing_ok) return rep;

  rep.normal_form_ok = true;
  for (int k = 0; k < n; ++k) {
    if (!normal_form(rb.basis.polys[k], rb.basis).is_zero()) {
      rep.normal_form_ok = false;
      rep.detail = "NF(f" + std::to_string(k + 1) + "^) != 0";
      break;
    }
  }
  return rep;
}

namespace {

// early rejection: reconstruct only g_2 and test the lifted coefficients
// against lambda_2; wrong labelings lift to essentially random residues
bool g2_filter(const ModRing& R, const StabChain& chain,
               const std::vector<Int>& pts, const Modulus& mod,
               const BoundData& bd) {
  if (chain.n() < 2) return true;
  OrbitConfig<ModRing> cfg{&chain, pts};
  ZpePoly g = orbit_ideal_element(R, cfg, 1, ExecPolicy::serial);
  for (const auto& [m, c] : g.terms()) {
    Rat b = lift_coeff(c, mod, bd.delta[1]);
    if (abs(b * Rat(bd.delta[1])) > bd.lambda[1]) return false;
  }
  return true;
}

}  // namespace

ReconstructedBasis align_action(const UniPoly& f, const PermGroup& G,
                                const StabChain& chain, const RootSystem& rs,
                                const BoundData& bd,
                                const std::vector<std::vector<Int>>& candidates,
                                ExecPolicy policy) {
  const int n = f.degree();
  auto try_labeling =
      [&](const std::vector<Int>& lab) -> std::optional<ReconstructedBasis> {
    try {
      ReconstructedBasis rb =
          reconstruct_basis(f, G, chain, rs, lab, bd, policy);
      if (!verify_basis(rb, f, G, chain).ok()) return std::nullopt;
      return rb;
    } catch (const InconsistentLabeling&) {
      return std::nullopt;
    }
  };

  if (!candidates.empty()) {
    for (const auto& cand : candidates) {
      if (static_cast<int>(cand.size()) != n)
        throw Error("candidate labeling has wrong length");
      // candidates are given mod p; map them to the lifted roots
      std::map<Int, Int> lift_of;
      for (const Int& r : rs.roots) lift_of[r % rs.p()] = r;
      std::vector<Int> lab;
      lab.reserve(n);
      for (const Int& v : cand) {
        auto it = lift_of.find(((v % rs.p()) + rs.p()) % rs.p());
        if (it == lift_of.end())
          throw InconsistentLabeling("candidate value " + v.get_str() +
                                     " is not a root of f mod p");
        lab.push_back(it->second);
      }
      if (auto rb = try_labeling(lab)) return *rb;
    }
    throw ActionMismatch("no supplied labeling realizes the group action");
  }

  if (n > 8)
    throw ActionMismatch(
        "exhaustive alignment is limited to degree 8; supply candidate "
        "labelings");

  std::vector<Int> sorted_roots = rs.roots;
  std::sort(sorted_roots.begin(), sorted_roots.end(),
            [&](const Int& a, const Int& b) { return a % rs.p() < b % rs.p(); });
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  ModRing R(rs.mod);
  do {
    std::vector<Int> lab(n);
    for (int i = 0; i < n; ++i) lab[i] = sorted_roots[idx[i]];
    if (!g2_filter(R, chain, lab, rs.mod, bd)) continue;
    if (auto rb = try_labeling(lab)) return *rb;
  } while (std::next_permutation(idx.begin(), idx.end()));
  throw ActionMismatch(
      "no labeling of the roots realizes the group action; the group is not "
      "the Galois group of f (or the prime is bad)");
}

std::optional<QPoly> express_root(const ReconstructedBasis& rb, int i) {
  if (i < 1 || i > rb.basis.n) throw Error("index out of range");
  if (rb.basis.degrees[i - 1] != 1) return std::nullopt;
  RatField F;
  QPoly p = rb.basis.polys[i - 1];
  QPoly lead(rb.basis.n);
  lead.add_term(F, Monomial::unit(rb.basis.n, i - 1), Rat(1));
  return mp_sub(F, lead, p);
}

}  // namespace relideal
