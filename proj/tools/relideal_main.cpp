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
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "relideal/json_io.hpp"
#include "relideal/splitfield.hpp"

namespace {

using namespace relideal;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CommonOpts {
  int threads = 0;
  bool serial = false;
  std::string format = "text";
  std::string output;
};

void apply_threads(const CommonOpts& o) {
#ifdef _OPENMP
  int t = o.threads;
  if (t == 0) {
    if (const char* env = std::getenv("RELIDEAL_THREADS")) t = std::atoi(env);
  }
  if (t > 0) omp_set_num_threads(t);
#else
  (void)o;
#endif
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output);
    out << text;
  }
}

std::vector<Int> parse_roots_csv(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && std::isspace((unsigned char)item.front()))
      item.erase(item.begin());
    while (!item.empty() && std::isspace((unsigned char)item.back()))
      item.pop_back();
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

int run_compute(const std::string& f_arg, const std::string& group_arg,
                const std::string& prime_arg, unsigned precision,
                const std::string& roots_arg, const CommonOpts& opts) {
  apply_threads(opts);
  ExecPolicy policy = opts.serial ? ExecPolicy::serial : ExecPolicy::openmp;
  UniPoly f = UniPoly::parse(read_text_or_file(f_arg));
  PermGroup G = parse_group_json(read_text_or_file(group_arg));
  if (G.n() != f.degree())
    throw Error("group degree does not match deg f");
  StabChain chain(G);

  auto t0 = Clock::now();
  Int p;
  if (prime_arg.empty()) {
    p = find_split_prime(f, 3);
  } else {
    p = Int(prime_arg);
    if (!splits_completely(f, p))
      throw BadPrime("supplied prime does not split f into distinct linear factors");
  }
  std::cerr << "[phase] split prime " << p.get_str() << " ("
            << ms_since(t0) << " ms)\n";

  t0 = Clock::now();
  BoundData bd = compute_bounds(f, chain.indices(), p);
  unsigned e = bd.e;
  if (precision > 0) {
    if (precision < bd.e)
      throw Error("precision override " + std::to_string(precision) +
                  " is below the required exponent " + std::to_string(bd.e));
    e = precision;
  }
  RootSystem rs = hensel_lift(f, p, e);
  std::cerr << "[phase] bounds and lift to e=" << e << " ("
            << ms_since(t0) << " ms)\n";

  t0 = Clock::now();
  std::vector<std::vector<Int>> candidates;
  if (!roots_arg.empty()) candidates.push_back(parse_roots_csv(roots_arg));
  ReconstructedBasis rb = align_action(f, G, chain, rs, bd, candidates, policy);
  std::cerr << "[phase] alignment and interpolation (" << ms_since(t0)
            << " ms)\n";

  emit(opts, opts.format == "json" ? basis_to_json(f, G, rb)
                                   : basis_to_text(f, G, rb));
  return 0;
}

int run_verify(const std::string& basis_arg, const CommonOpts& opts) {
  BasisDocument doc = parse_basis_json(read_text_or_file(basis_arg));
  std::vector<Perm> gens;
  for (const auto& s : doc.group_generators)
    gens.push_back(Perm::from_cycles(doc.n, s));
  PermGroup G = PermGroup::enumerate(doc.n, gens);
  StabChain chain(G);
  BoundData bd = compute_bounds(doc.f, chain.indices(), doc.p);

  ReconstructedBasis rb;
  rb.basis.n = doc.n;
  rb.basis.degrees = doc.degree_profile;
  rb.basis.polys = doc.polys;
  rb.p = doc.p;
  rb.e = bd.e;
  rb.delta = bd.delta;
  rb.lambda = bd.lambda;
  rb.e_i = bd.e_i;

  VerifyReport rep = verify_basis(rb, doc.f, G, chain);
  std::ostringstream os;
  os << "shape:       " << (rep.shape_ok ? "PASS" : "FAIL") << "\n"
     << "integrality: " << (rep.integral_ok ? "PASS" : "FAIL") << "\n"
     << "bound:       " << (rep.bound_ok ? "PASS" : "FAIL") << "\n"
     << "vanishing:   " << (rep.vanishing_ok ? "PASS" : "FAIL")
     << " (second prime " << rep.second_prime.get_str() << ")\n"
     << "normal form: " << (rep.normal_form_ok ? "PASS" : "FAIL") << "\n"
     << "verdict:     " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  if (!rep.detail.empty()) os << "detail:      " << rep.detail << "\n";
  emit(opts, os.str());
  return rep.ok() ? 0 : 5;
}

template <class Ring>
std::string bm_report(const Ring& R, const PointSet<Ring>& X) {
  BMResult<Ring> bm = buchberger_moeller(R, X);
  std::ostringstream os;
  os << "groebner basis:\n";
  for (const auto& g : bm.groebner) {
    if constexpr (std::is_same_v<Ring, RatField>) {
      os << "  " << to_string(g) << "\n";
    } else {
      RatField F;
      QPoly q(g.arity());
      for (const auto& [m, c] : g.terms()) q.add_term(F, m, Rat(c));
      os << "  " << to_string(q) << "\n";
    }
  }
  os << "order ideal size: " << bm.order_ideal.size() << "\n";
  os << "corners:";
  RatField F;
  for (const auto& c : bm.corners) {
    QPoly q(c.arity());
    q.add_term(F, c, Rat(1));
    os << " " << to_string(q);
  }
  os << "\n";
  return os.str();
}

int run_bm(const std::string& points_arg, const CommonOpts& opts) {
  PointSetDocument doc = parse_pointset_json(read_text_or_file(points_arg));
  std::string out;
  if (doc.rational) {
    RatField R;
    std::vector<std::vector<Rat>> pts;
    for (const auto& p : doc.points) {
      std::vector<Rat> row;
      for (const auto& c : p) row.push_back(Rat(c));
      pts.push_back(std::move(row));
    }
    out = bm_report(R, PointSet<RatField>::make(R, doc.n, std::move(pts)));
  } else {
    Modulus mod(doc.p, 1);
    ModRing R(mod);
    std::vector<std::vector<Int>> pts;
    for (const auto& p : doc.points) {
      std::vector<Int> row;
      for (const auto& c : p) row.push_back(mod.reduce(Int(c)));
      pts.push_back(std::move(row));
    }
    out = bm_report(R, PointSet<ModRing>::make(R, doc.n, std::move(pts)));
  }
  emit(opts, out);
  return 0;
}

ReconstructedBasis basis_from_doc(const BasisDocument& doc) {
  ReconstructedBasis rb;
  rb.basis.n = doc.n;
  rb.basis.degrees = doc.degree_profile;
  rb.basis.polys = doc.polys;
  rb.basis.validate();
  rb.p = doc.p;
  rb.e = doc.e;
  return rb;
}

int run_reduce(const std::string& basis_arg, const std::string& poly_arg,
               const CommonOpts& opts) {
  BasisDocument doc = parse_basis_json(read_text_or_file(basis_arg));
  ReconstructedBasis rb = basis_from_doc(doc);
  QPoly P = parse_qpoly(read_text_or_file(poly_arg), doc.n);
  emit(opts, to_string(normal_form(P, rb.basis)) + "\n");
  return 0;
}

int run_inv(const std::string& basis_arg, const std::string& poly_arg,
            const CommonOpts& opts) {
  BasisDocument doc = parse_basis_json(read_text_or_file(basis_arg));
  ReconstructedBasis rb = basis_from_doc(doc);
  auto field = std::make_shared<SplittingField>(rb.basis);
  FieldElem a(field, parse_qpoly(read_text_or_file(poly_arg), doc.n));
  FieldElem b = field_inv(a);
  emit(opts, to_string(b.rep()) + "\n");
  return 0;
}

int run_express(const std::string& basis_arg, int index, const CommonOpts& opts) {
  BasisDocument doc = parse_basis_json(read_text_or_file(basis_arg));
  ReconstructedBasis rb = basis_from_doc(doc);
  std::optional<QPoly> P = express_root(rb, index);
  if (!P) {
    emit(opts, "not expressible: d_" + std::to_string(index) + " = " +
                   std::to_string(rb.basis.degrees[index - 1]) + " > 1\n");
    return 7;
  }
  emit(opts, "T" + std::to_string(index) + " = " + to_string(*P) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relation-ideal Groebner bases from a Galois group and p-adic roots"};
  app.require_subcommand(1);

  CommonOpts opts;
  app.add_option("--threads", opts.threads,
                 "worker cap for parallel interpolation (or RELIDEAL_THREADS)");
  app.add_flag("--serial", opts.serial, "force the serial reference path");
  app.add_option("--format", opts.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opts.output, "write to a file instead of stdout");

  std::string f_arg, group_arg, prime_arg, roots_arg, basis_arg, points_arg,
      poly_arg;
  unsigned precision = 0;
  int index = 0;

  CLI::App* compute = app.add_subcommand(
      "compute", "compute the triangular basis of the relation ideal");
  compute->add_option("--f", f_arg, "monic polynomial (text or file)")
      ->required();
  compute->add_option("--group", group_arg, "group descriptor JSON (text or file)")
      ->required();
  compute->add_option("--prime", prime_arg, "split prime override");
  compute->add_option("--precision", precision, "precision exponent override");
  compute->add_option("--roots", roots_arg,
                      "candidate root labeling, comma-separated residues mod p");

  CLI::App* verify = app.add_subcommand("verify", "verify a basis document");
  verify->add_option("--basis", basis_arg, "basis JSON (text or file)")
      ->required();

  CLI::App* bm = app.add_subcommand(
      "bm", "Buchberger-Moeller basis of a finite point set");
  bm->add_option("--points", points_arg, "point set JSON (text or file)")
      ->required();

  CLI::App* reduce = app.add_subcommand("reduce", "normal form modulo a basis");
  reduce->add_option("--basis", basis_arg, "basis JSON")->required();
  reduce->add_option("--poly", poly_arg, "polynomial to reduce")->required();

  CLI::App* inv = app.add_subcommand("inv", "invert in the splitting field");
  inv->add_option("--basis", basis_arg, "basis JSON")->required();
  inv->add_option("--poly", poly_arg, "element to invert")->required();

  CLI::App* express = app.add_subcommand(
      "express", "express a root as a polynomial in the earlier ones");
  express->add_option("--basis", basis_arg, "basis JSON")->required();
  express->add_option("--index", index, "root index i (1-based)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return run_compute(f_arg, group_arg, prime_arg, precision, roots_arg, opts);
    if (verify->parsed()) return run_verify(basis_arg, opts);
    if (bm->parsed()) return run_bm(points_arg, opts);
    if (reduce->parsed()) return run_reduce(basis_arg, poly_arg, opts);
    if (inv->parsed()) return run_inv(basis_arg, poly_arg, opts);
    if (express->parsed()) return run_express(basis_arg, index, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const NoSplitPrimeFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ActionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
