// Copyright 2026 The polydecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polydecomp/cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydecomp/chebyshev.h"
#include "polydecomp/classify.h"
#include "polydecomp/cusp.h"
#include "polydecomp/decompose.h"
#include "polydecomp/errors.h"
#include "polydecomp/json_io.h"
#include "polydecomp/odd_monoid.h"
#include "polydecomp/text.h"
#include "polydecomp/verify.h"

namespace polydecomp {

namespace {

constexpr int kSchema = 1;

const char* kOperationsFooter = R"(Operations by subcommand:
  parse       parse, format, derivative, even_odd_split, rational_roots,
              unit_inverse, evaluate (--at)
  compose     compose, compose_chain
  decompose   right_factor (--degree), is_indecomposable,
              complete_decomposition
  classes     enumerate_classes, ritt1_check (--monoid kx);
              decompose_in_O (--monoid odd);
              enumerate_A_decompositions (--monoid cusp)
  classify    classify_shape
  invariants  ritt_invariants
  common      common_composite (--degree-bound, default 10*lcm)
  cheb        chebyshev, extract_odd_base, chebyshev_reduction_identities
              (--identities)
  odd         analyze: is_odd, is_irreducible_in_O, decompose_in_O,
                       classify_odd_swap
              swap:    classify_odd_swap
              adjust:  adjust_to_odd
  cusp        report:    cusp_report, index_at_zero, classify_CD
              decs:      enumerate_A_decompositions, max_decompositions,
                         instantiate
              move:      apply_cusp_move, undo_adm (--undo)
              criterion: in_A, compose_in_A_criterion, admissible_shifts
  verify      suites ritt1, invariants, chebyshev, odd, cusp, all

Random corpora: factor counts uniform in {2,3,4}, factor degrees from
{2,3,5,7}, coefficients uniform in {-3..3} with nonzero leading coefficient;
cusp corpora solve one linear coefficient per factor to place rational
critical points. Odd-monoid samples use coefficients in {-3..3} scaled by 1
or 1/2 and degrees <= 7. The engine is mt19937_64 seeded by --seed.

Exit codes: 0 success, 1 usage or parse error, 2 domain error (pattern
mismatch, not in the monoid, failed verification), 3 an irrational root is
required.)";

struct Inputs {
  std::vector<std::string> polys;
  std::vector<std::string> files;
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--poly", in.polys, "Polynomial in text form (repeatable)");
  cmd->add_option("--file", in.files,
                  "JSON file: a polynomial, a list of them, or an object "
                  "with \"factors\" (repeatable)")
      ->check(CLI::ExistingFile);
}

void collect_json(const Json& j, std::vector<Polynomial>& out) {
  if (j.is_array()) {
    for (const Json& e : j) collect_json(e, out);
  } else if (j.is_object() && j.contains("factors")) {
    for (const Polynomial& f : decomposition_from_json(j).factors) {
      out.push_back(f);
    }
  } else {
    out.push_back(polynomial_from_json(j));
  }
}

std::vector<Polynomial> read_inputs(const Inputs& in) {
  std::vector<Polynomial> out;
  for (const std::string& t : in.polys) out.push_back(parse(t));
  for (const std::string& path : in.files) {
    std::ifstream f(path);
    Json j;
    try {
      j = Json::parse(f);
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("invalid JSON in ") + path, e.byte);
    }
    collect_json(j, out);
  }
  return out;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Polynomial> need(const Inputs& in, std::size_t count) {
  auto p = read_inputs(in);
  if (p.size() != count) {
    throw UsageError("expected " + std::to_string(count) +
                     " input polynomial(s), got " + std::to_string(p.size()));
  }
  return p;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json poly_list(std::span<const Polynomial> ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(to_json(p));
  return out;
}

Json rational_list(std::span<const Rational> rs) {
  Json out = Json::array();
  for (const Rational& r : rs) out.push_back(to_json(r));
  return out;
}

Json text_list(std::span<const Polynomial> ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(format(p));
  return out;
}

Json unit_json(const Unit& u) {
  Json j;
  j["shift"] = to_json(u.shift());
  j["scale"] = to_json(u.scale());
  return j;
}

Json class_list(std::span<const Decomposition> classes) {
  Json out = Json::array();
  for (const Decomposition& d : classes) {
    Json c;
    c["degrees"] = degree_sequence(d.factors);
    c["factors"] = poly_list(d.factors);
    c["text"] = text_list(d.factors);
    out.push_back(std::move(c));
  }
  return out;
}

Json ritt1_json(const Ritt1Report& r) {
  Json j;
  j["class_count"] = r.class_count;
  j["length"] = r.length;
  j["degree_multiset"] = r.degree_multiset;
  j["pass"] = r.pass;
  return j;
}

Json witness_json(const QWitness& w) {
  Json j;
  j["variant"] = to_string(w.variant);
  j["l"] = w.l;
  j["s"] = w.s;
  j["g"] = to_json(w.g);
  j["left"] = unit_json(w.left);
  j["right"] = unit_json(w.right);
  return j;
}

Json shape_json(const ShapeClass& c) {
  Json j;
  j["tag"] = to_string(c.tag);
  if (c.tag == ShapeTag::P) {
    j["l"] = c.l;
    j["center"] = to_json(c.center);
    j["left"] = unit_json(c.left);
  }
  Json ws = Json::array();
  for (const QWitness& w : c.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

Json invariants_json(const RittInvariants& r) {
  Json j;
  j["n_p"] = r.n_p;
  j["n_q"] = r.n_q;
  j["n_r"] = r.n_r;
  j["n_undetermined"] = r.n_undetermined;
  Json by = Json::object();
  for (const auto& [prime, count] : r.n_p_by_prime) {
    by[std::to_string(prime)] = count;
  }
  j["n_p_by_prime"] = std::move(by);
  return j;
}

Json swap_json(const OddSwap& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == OddSwapKind::kChebyshev) {
    j["n"] = s.n;
    j["m"] = s.m;
  } else {
    j["s"] = s.s;
    j["t"] = s.t;
    j["alpha"] = to_json(s.alpha);
  }
  return j;
}

Json a_decompositions_json(const ADecompositionSet& set) {
  Json j;
  j["lengths"] = set.lengths;
  Json members = Json::array();
  for (const ADecomposition& m : set.members) {
    Json e;
    e["factors"] = poly_list(m.factors);
    e["text"] = text_list(m.factors);
    Json kinds = Json::array();
    for (CuspClass k : m.kinds) kinds.push_back(to_string(k));
    e["kinds"] = std::move(kinds);
    e["block_sizes"] = m.block_sizes;
    members.push_back(std::move(e));
  }
  j["members"] = std::move(members);
  return j;
}

Json cusp_report_json(const CuspReport& r) {
  Json j;
  j["l"] = r.l;
  j["l_A"] = r.l_a;
  j["index"] = r.index;
  j["defect"] = r.defect;
  j["regular"] = r.regular;
  j["rational_realizable"] = r.rational_realizable;
  j["witness"] = to_json(r.witness);
  return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::size_t lcm_degree(const Polynomial& a, const Polynomial& b) {
  return std::lcm(static_cast<std::size_t>(a.degree()),
                  static_cast<std::size_t>(b.degree()));
}

std::optional<Rational> parse_shift(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::from_string(s);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact functional decomposition of univariate polynomials",
               "polydecomp"};
  app.require_subcommand(1);
  app.footer(kOperationsFooter);

  Inputs in;
  std::string at, monoid = "kx", format_opt = "json", suite = "all",
                  shift_text, kind_text;
  std::size_t degree = 0, bound = 0, pos = 0, trials = 100;
  unsigned cheb_n = 0;
  std::uint64_t seed = 42;
  bool identities = false, undo = false;
  std::vector<std::string> factor_texts;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and describe a polynomial");
  add_inputs(parse_cmd, in);
  parse_cmd->add_option("--at", at, "Evaluate at this rational");

  auto* compose_cmd =
      app.add_subcommand("compose", "Compose the inputs left to right");
  add_inputs(compose_cmd, in);

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "Complete decomposition, or a right factor of --degree");
  add_inputs(decompose_cmd, in);
  decompose_cmd->add_option("--degree", degree, "Degree of the right factor");

  auto* classes_cmd =
      app.add_subcommand("classes", "All decomposition classes");
  add_inputs(classes_cmd, in);
  classes_cmd->add_option("--monoid", monoid, "kx, odd or cusp")
      ->check(CLI::IsMember({"kx", "odd", "cusp"}));

  auto* classify_cmd =
      app.add_subcommand("classify", "Shape class P, Q or R of an indecomposable");
  add_inputs(classify_cmd, in);

  auto* invariants_cmd = app.add_subcommand(
      "invariants", "Counts of P, Q and R factors over all classes");
  add_inputs(invariants_cmd, in);

  auto* common_cmd = app.add_subcommand(
      "common", "Common composite alpha o a == beta o b of two inputs");
  add_inputs(common_cmd, in);
  common_cmd->add_option("--degree-bound", bound,
                         "Largest composite degree tried (default 10*lcm)");

  auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev polynomial T_n");
  cheb_cmd->add_option("n", cheb_n, "Index n >= 1")->required();
  cheb_cmd->add_option("--format", format_opt, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cheb_cmd->add_flag("--identities", identities,
                     "Also check the degree-2 reduction identities");

  auto* odd_cmd = app.add_subcommand("odd", "The monoid of odd polynomials");
  odd_cmd->require_subcommand(1);
  auto* odd_analyze = odd_cmd->add_subcommand(
      "analyze", "Membership, irreducibility, classes and swaps");
  add_inputs(odd_analyze, in);
  auto* odd_swap = odd_cmd->add_subcommand(
      "swap", "Classify the swap (p, q) -> (p*, q*); four inputs");
  add_inputs(odd_swap, in);
  auto* odd_adjust = odd_cmd->add_subcommand(
      "adjust", "Move g o h to odd factors; two inputs g, h");
  add_inputs(odd_adjust, in);

  auto* cusp_cmd = app.add_subcommand("cusp", "The cusp semigroup A");
  cusp_cmd->require_subcommand(1);
  auto* cusp_report_cmd =
      cusp_cmd->add_subcommand("report", "Lengths, index, defect");
  add_inputs(cusp_report_cmd, in);
  auto* cusp_decs =
      cusp_cmd->add_subcommand("decs", "A-decompositions and Max skeleton");
  add_inputs(cusp_decs, in);
  auto* cusp_move = cusp_cmd->add_subcommand("move", "Apply a cusp move");
  add_inputs(cusp_move, in);
  cusp_move->add_option("--pos", pos, "1-based position")->required();
  cusp_move->add_option("--kind", kind_text, "adm, ca, cb or cc")
      ->required()
      ->check(CLI::IsMember({"adm", "ca", "cb", "cc"}));
  cusp_move->add_option("--shift", shift_text, "Admissible shift to use");
  cusp_move->add_option("--factor", factor_texts,
                        "Factor of the decomposition to move (repeatable); "
                        "defaults to the first base of the Max skeleton");
  cusp_move->add_flag("--undo", undo,
                      "Undo an adm move with --shift instead of applying one");
  auto* cusp_criterion = cusp_cmd->add_subcommand(
      "criterion", "Whether a o b lies in A; two inputs a, b");
  add_inputs(cusp_criterion, in);

  auto* verify_cmd =
      app.add_subcommand("verify", "Run a seeded invariant suite");
  verify_cmd->add_option("--suite", suite,
                         "ritt1, invariants, chebyshev, odd, cusp or all")
      ->check(CLI::IsMember({"ritt1", "invariants", "chebyshev", "odd", "cusp",
                             "all"}));
  verify_cmd->add_option("--trials", trials, "Corpus size per suite");
  verify_cmd->add_option("--seed", seed, "Corpus seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*parse_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("parse");
      j["poly"] = to_json(p);
      j["text"] = format(p);
      j["degree"] = p.is_zero() ? Json(nullptr) : Json(p.degree());
      j["derivative"] = to_json(derivative(p));
      const auto [even, odd] = even_odd_split(p);
      j["even"] = to_json(even);
      j["odd"] = to_json(odd);
      j["rational_roots"] =
          p.is_zero() ? Json(nullptr) : rational_list(rational_roots(p));
      if (!p.is_zero() && p.degree() == 1) {
        j["unit_inverse"] =
            to_json(unit_inverse(Unit::from_polynomial(p)).to_polynomial());
      }
      if (!at.empty()) j["value"] = to_json(evaluate(p, Rational::from_string(at)));
      emit(out, j);
    } else if (*compose_cmd) {
      const auto ps = read_inputs(in);
      if (ps.empty()) throw UsageError("compose needs at least one input");
      const Polynomial c = compose_chain(ps);
      Json j = envelope("compose");
      j["result"] = to_json(c);
      j["text"] = format(c);
      emit(out, j);
    } else if (*decompose_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("decompose");
      if (decompose_cmd->count("--degree")) {
        const auto f = right_factor(p, degree);
        j["degree"] = degree;
        j["found"] = f.has_value();
        if (f) {
          j["left"] = to_json(f->first);
          j["right"] = to_json(f->second);
        }
      } else {
        const Decomposition d = complete_decomposition(p);
        j["indecomposable"] = d.factors.size() == 1;
        j["target"] = to_json(d.target);
        j["factors"] = poly_list(d.factors);
        j["text"] = text_list(d.factors);
      }
      emit(out, j);
    } else if (*classes_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("classes");
      j["monoid"] = monoid;
      if (monoid == "kx") {
        const auto classes = enumerate_classes(p);
        j["classes"] = class_list(classes);
        j["ritt1"] = ritt1_json(ritt1_check(classes));
      } else if (monoid == "odd") {
        j["classes"] = class_list(decompose_in_O(p));
      } else {
        j["a_decompositions"] = a_decompositions_json(enumerate_A_decompositions(p));
      }
      emit(out, j);
    } else if (*classify_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("classify");
      j["shape"] = shape_json(classify_shape(p));
      emit(out, j);
    } else if (*invariants_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("invariants");
      j["invariants"] = invariants_json(ritt_invariants(p));
      emit(out, j);
    } else if (*common_cmd) {
      const auto ps = need(in, 2);
      if (ps[0].is_constant() || ps[1].is_constant()) {
        throw DomainError("common composite needs nonconstant inputs");
      }
      const std::size_t b =
          common_cmd->count("--degree-bound") ? bound : 10 * lcm_degree(ps[0], ps[1]);
      const auto c = common_composite(ps[0], ps[1], b);
      Json j = envelope("common");
      j["degree_bound"] = b;
      j["found"] = c.has_value();
      if (c) {
        j["c"] = to_json(c->c);
        j["alpha"] = to_json(c->alpha);
        j["beta"] = to_json(c->beta);
        j["text"] = format(c->c);
      }
      emit(out, j);
    } else if (*cheb_cmd) {
      const Polynomial t = chebyshev(cheb_n);
      if (format_opt == "text" && !identities) {
        out << format(t) << "\n";
        return kExitOk;
      }
      Json j = envelope("cheb");
      j["n"] = cheb_n;
      j["poly"] = to_json(t);
      j["text"] = format(t);
      if (cheb_n % 2 == 1) j["odd_base"] = to_json(extract_odd_base(t));
      if (identities) {
        Json checks = Json::array();
        for (const auto& c : chebyshev_reduction_identities()) {
          Json e;
          e["n"] = c.n;
          e["composed_with_t2"] = c.composed_with_t2;
          e["conjugated"] = c.conjugated;
          checks.push_back(std::move(e));
        }
        j["identities"] = std::move(checks);
      }
      if (format_opt == "text") {
        out << format(t) << "\n";
        for (const auto& c : j["identities"]) {
          out << "n=" << c["n"].get<unsigned>() << " composed_with_t2="
              << c["composed_with_t2"].get<bool>()
              << " conjugated=" << c["conjugated"].get<bool>() << "\n";
        }
      } else {
        emit(out, j);
      }
    } else if (*odd_analyze) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("odd analyze");
      const bool odd = is_odd(p);
      j["is_odd"] = odd;
      if (odd && !p.is_zero() && p.degree() >= 2) {
        const auto classes = decompose_in_O(p);
        j["irreducible_in_O"] = is_irreducible_in_O(p);
        j["classes"] = class_list(classes);
        // Adjacent pairs that differ between classes of the same length.
        Json swaps = Json::array();
        for (std::size_t x = 0; x < classes.size(); ++x) {
          for (std::size_t y = 0; y < classes.size(); ++y) {
            const auto& f = classes[x].factors;
            const auto& g = classes[y].factors;
            if (x == y || f.size() != g.size()) continue;
            for (std::size_t k = 0; k + 1 < f.size(); ++k) {
              bool same_outside = true;
              for (std::size_t m = 0; m < f.size(); ++m) {
                if (m != k && m != k + 1 && f[m] != g[m]) same_outside = false;
              }
              if (!same_outside) continue;
              try {
                const OddSwap s = classify_odd_swap(f[k], f[k + 1], g[k], g[k + 1]);
                Json e;
                e["from_class"] = x;
                e["to_class"] = y;
                e["position"] = k + 1;
                e["swap"] = swap_json(s);
                swaps.push_back(std::move(e));
              } catch (const DomainError&) {
                // Not a single adjacent swap between these two classes.
              }
            }
          }
        }
        j["swaps"] = std::move(swaps);
      }
      emit(out, j);
    } else if (*odd_swap) {
      const auto ps = need(in, 4);
      Json j = envelope("odd swap");
      j["swap"] = swap_json(classify_odd_swap(ps[0], ps[1], ps[2], ps[3]));
      emit(out, j);
    } else if (*odd_adjust) {
      const auto ps = need(in, 2);
      Json j = envelope("odd adjust");
      const auto adj = adjust_to_odd(ps[0], ps[1]);
      j["adjustable"] = adj.has_value();
      if (adj) {
        j["left"] = to_json(adj->first);
        j["right"] = to_json(adj->second);
      }
      emit(out, j);
    } else if (*cusp_report_cmd) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("cusp report");
      j["report"] = cusp_report_json(cusp_report(p));
      j["class"] = p.degree() >= 2 ? Json(to_string(classify_CD(p))) : Json(nullptr);
      emit(out, j);
    } else if (*cusp_decs) {
      const Polynomial p = need(in, 1).front();
      Json j = envelope("cusp decs");
      j["a_decompositions"] = a_decompositions_json(enumerate_A_decompositions(p));
      const MaxSkeleton sk = max_decompositions(p);
      Json skel;
      skel["length"] = sk.length;
      Json bases = Json::array();
      for (const MaxBase& b : sk.bases) {
        Json e;
        e["base"] = poly_list(b.base.factors);
        e["text"] = text_list(b.base.factors);
        Json sets = Json::array();
        for (const auto& s : b.shift_sets) sets.push_back(rational_list(s));
        e["shift_sets"] = std::move(sets);
        e["rational_realizable"] = b.rational_realizable;
        bases.push_back(std::move(e));
      }
      skel["bases"] = std::move(bases);
      j["max_skeleton"] = std::move(skel);
      Json members = Json::array();
      for (const auto& m : max_members(sk)) {
        Json e;
        e["factors"] = poly_list(m);
        e["text"] = text_list(m);
        members.push_back(std::move(e));
      }
      j["max_members"] = std::move(members);
      emit(out, j);
    } else if (*cusp_move) {
      std::vector<Polynomial> factors;
      for (const std::string& t : factor_texts) factors.push_back(parse(t));
      const auto ps = read_inputs(in);
      if (ps.size() > 1) throw UsageError("cusp move takes one --poly");
      if (factors.empty()) {
        if (ps.empty()) throw UsageError("cusp move needs --poly or --factor");
        const MaxSkeleton sk = max_decompositions(ps.front());
        if (sk.bases.empty()) throw DomainError("no base decomposition");
        factors = sk.bases.front().base.factors;
      } else if (!ps.empty() && compose_chain(factors) != ps.front()) {
        throw DomainError("the factors do not compose to --poly");
      }
      const auto shift = parse_shift(shift_text);
      Json j = envelope("cusp move");
      j["input"] = poly_list(factors);
      j["position"] = pos;
      j["kind"] = kind_text;
      std::vector<Polynomial> result;
      if (undo) {
        if (kind_text != "adm" || !shift) {
          throw UsageError("--undo needs --kind adm and --shift");
        }
        result = undo_adm(factors, pos, *shift);
      } else {
        static const std::map<std::string, CuspMove> kinds = {
            {"adm", CuspMove::kAdm}, {"ca", CuspMove::kCa},
            {"cb", CuspMove::kCb}, {"cc", CuspMove::kCc}};
        result = apply_cusp_move(factors, pos, kinds.at(kind_text), shift).factors;
      }
      j["undo"] = undo;
      j["factors"] = poly_list(result);
      j["text"] = text_list(result);
      j["all_in_A"] = std::all_of(result.begin(), result.end(),
                                  [](const Polynomial& q) { return in_A(q); });
      j["recomposes"] = compose_chain(result) == compose_chain(factors);
      emit(out, j);
    } else if (*cusp_criterion) {
      const auto ps = need(in, 2);
      const CompositionInA c = compose_in_A_criterion(ps[0], ps[1]);
      Json j = envelope("cusp criterion");
      j["in_A"] = c.in_a;
      j["branch"] = to_string(c.branch);
      j["a_in_A"] = in_A(ps[0]);
      j["b_in_A"] = in_A(ps[1]);
      j["a_admissible_shifts"] = rational_list(admissible_shifts(ps[0]));
      j["b_admissible_shifts"] = rational_list(admissible_shifts(ps[1]));
      emit(out, j);
    } else if (*verify_cmd) {
      const auto reports = run_suites(suite, trials, seed);
      Json j = envelope("verify");
      j["suite"] = suite;
      j["trials"] = trials;
      j["seed"] = seed;
      Json rs = Json::array();
      bool ok = true;
      for (const SuiteReport& r : reports) {
        rs.push_back(to_json(r));
        ok = ok && r.failed == 0;
      }
      j["suites"] = std::move(rs);
      j["pass"] = ok;
      emit(out, j);
      return ok ? kExitOk : kExitDomain;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const IrrationalRootRequired& e) {
    err << "error: " << e.what() << "\n";
    return kExitIrrational;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace polydecomp
