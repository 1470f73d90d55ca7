// trialab: exact-arithmetic workbench for triassociative, Leibniz and
// ternary Leibniz algebras given by structure constants.
//
// Exit codes: 0 all checks empty / construction succeeded, 1 violations
// found (or a property returned false), 2 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "trialab/functors.hpp"
#include "trialab/json_io.hpp"
#include "trialab/operators.hpp"

namespace {

using namespace trialab;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitInputError = 2;

struct ReportOptions {
  bool json = false;
};

std::string witness_text(const std::vector<int>& witness) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) os << ",";
    os << witness[i] + 1;  // basis positions are 1-based in text output
  }
  os << ")";
  return os.str();
}

void print_report(const ViolationReport& report, const ReportOptions& opts) {
  if (opts.json) {
    std::ostringstream os;
    os << "{\"schema\":\"trialab/report@1\",\"violations\":[";
    bool first = true;
    for (const Violation& v : report) {
      if (!first) os << ",";
      first = false;
      os << "{\"axiom\":\"" << v.axiom_id << "\",\"witness\":[";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) os << ",";
        os << v.witness[i];
      }
      os << "],\"discrepancy\":[";
      for (std::size_t i = 0; i < v.discrepancy.size(); ++i) {
        if (i) os << ",";
        os << "\"" << v.discrepancy[i].str() << "\"";
      }
      os << "]}";
    }
    os << "]}";
    std::cout << os.str() << "\n";
    return;
  }
  for (const Violation& v : report) {
    std::cout << "VIOLATION " << v.axiom_id << " witness=" << witness_text(v.witness)
              << " discrepancy=(";
    for (std::size_t i = 0; i < v.discrepancy.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << v.discrepancy[i].str();
    }
    std::cout << ")\n";
  }
  if (report.empty())
    std::cout << "OK: all checked identities hold\n";
  else
    std::cout << report.size() << " violation(s) found\n";
}

int finish_report(const ViolationReport& report, const ReportOptions& opts) {
  print_report(report, opts);
  return report.empty() ? kExitOk : kExitViolations;
}

int finish_bool(bool value, const ReportOptions& opts, const char* label) {
  if (opts.json)
    std::cout << "{\"schema\":\"trialab/report@1\",\"" << label << "\":" << (value ? "true" : "false")
              << "}\n";
  else
    std::cout << label << ": " << (value ? "true" : "false") << "\n";
  return value ? kExitOk : kExitViolations;
}

void emit(const Document& doc, const std::optional<std::string>& out_path) {
  if (out_path) {
    save_document(doc, *out_path);
    std::cout << "written " << *out_path << "\n";
  } else {
    std::cout << document_to_text(doc);
  }
}

OperatorKind make_operator_kind(const std::string& name, const std::string& weight) {
  const OperatorKind::Tag tag = operator_tag_from_string(name);
  if (tag == OperatorKind::Tag::RotaBaxter)
    return OperatorKind::rota_baxter(Rational::parse(weight));
  return OperatorKind{tag, 0};
}

std::vector<Rational> parse_grid(const std::string& grid) {
  std::vector<Rational> values;
  std::stringstream ss(grid);
  std::string token;
  while (std::getline(ss, token, ',')) values.push_back(Rational::parse(token));
  if (values.empty()) throw Error("empty operator search grid");
  return values;
}

ViolationReport action_full_report(const Action& act) {
  ViolationReport report = check_structure(act.acting()).prefixed("acting-");
  report.merge(check_structure(act.acted()).prefixed("acted-"));
  report.merge(check_action(act));
  report.sort();
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant workbench for triassociative, Leibniz and ternary Leibniz algebras"};
  app.require_subcommand(1);
  ReportOptions opts;
  app.add_flag("--json", opts.json, "structured JSON reports on stdout");

  std::string in1, in2, in3, in4;
  std::optional<std::string> out_path, ternary_out;
  std::string operator_name, weight = "0", variant = "main", from_kind, grid = "-1,0,1";

  // check ------------------------------------------------------------------
  CLI::App* check = app.add_subcommand("check", "run a checker; exit 1 on violations");
  check->require_subcommand(1);

  CLI::App* c_structure = check->add_subcommand("structure", "axioms of the algebra's kind");
  c_structure->add_option("algebra", in1)->required();

  CLI::App* c_operator = check->add_subcommand("operator", "operator defining identity");
  c_operator->add_option("algebra", in1)->required();
  c_operator->add_option("map", in2)->required();
  c_operator->add_option("--operator", operator_name, "rota-baxter|nijenhuis|reynolds|averaging|centroid")
      ->required();
  c_operator->add_option("--weight", weight, "rota-baxter weight p/q (default 0)");

  CLI::App* c_morphism = check->add_subcommand("morphism", "f(x*y) = f(x)*f(y) per slot");
  c_morphism->add_option("map", in1)->required();
  c_morphism->add_option("source", in2)->required();
  c_morphism->add_option("target", in3)->required();

  CLI::App* c_action = check->add_subcommand("action", "mixed semidirect instances");
  c_action->add_option("action", in1)->required();

  CLI::App* c_crossed = check->add_subcommand("crossed-module", "equivariance and Peiffer identities");
  c_crossed->add_option("crossed-module", in1)->required();

  CLI::App* c_cmorph = check->add_subcommand("crossed-morphism", "square and intertwining");
  c_cmorph->add_option("alpha", in1)->required();
  c_cmorph->add_option("beta", in2)->required();
  c_cmorph->add_option("source", in3)->required();
  c_cmorph->add_option("target", in4)->required();

  // construct ----------------------------------------------------------------
  CLI::App* construct = app.add_subcommand("construct", "build a derived object");
  construct->require_subcommand(1);

  CLI::App* k_quotient = construct->add_subcommand("quotient", "algebra modulo an ideal");
  k_quotient->add_option("algebra", in1)->required();
  k_quotient->add_option("subspace", in2)->required();
  k_quotient->add_option("-o,--output", out_path);

  CLI::App* k_dsum = construct->add_subcommand("direct-sum", "block-diagonal sum");
  k_dsum->add_option("first", in1)->required();
  k_dsum->add_option("second", in2)->required();
  k_dsum->add_option("-o,--output", out_path);

  CLI::App* k_semi = construct->add_subcommand("semidirect", "semidirect sum of an action");
  k_semi->add_option("action", in1)->required();
  k_semi->add_option("-o,--output", out_path);

  CLI::App* k_ideal = construct->add_subcommand("from-ideal", "ideal inclusion crossed module");
  k_ideal->add_option("algebra", in1)->required();
  k_ideal->add_option("subspace", in2)->required();
  k_ideal->add_option("-o,--output", out_path);

  // derive -------------------------------------------------------------------
  CLI::App* derive = app.add_subcommand("derive", "derived product of a passing operator");
  derive->add_option("algebra", in1)->required();
  derive->add_option("map", in2)->required();
  derive->add_option("--operator", operator_name, "rota-baxter|nijenhuis|reynolds|averaging|centroid")
      ->required();
  derive->add_option("--weight", weight, "rota-baxter weight p/q (default 0)");
  derive->add_option("-o,--output", out_path);

  // functor ------------------------------------------------------------------
  CLI::App* functor = app.add_subcommand("functor", "category-bridging constructions");
  functor->require_subcommand(1);

  CLI::App* f_ttri = functor->add_subcommand("t-tri", "ternary bracket of a triassociative algebra");
  f_ttri->add_option("algebra", in1)->required();
  f_ttri->add_option("--variant", variant, "main|b1|b2 (default main)");
  f_ttri->add_option("-o,--output", out_path);

  CLI::App* f_tleib = functor->add_subcommand("t-leibniz", "nested bracket of a Leibniz algebra");
  f_tleib->add_option("algebra", in1)->required();
  f_tleib->add_option("-o,--output", out_path);

  CLI::App* f_swap = functor->add_subcommand("swap", "reversed-argument ternary bracket");
  f_swap->add_option("algebra", in1)->required();
  f_swap->add_option("-o,--output", out_path);

  CLI::App* f_opp = functor->add_subcommand("opposite", "mirrored triassociative products");
  f_opp->add_option("algebra", in1)->required();
  f_opp->add_option("-o,--output", out_path);

  CLI::App* f_avg = functor->add_subcommand("assoc-averaging", "averaging ternary bracket");
  f_avg->add_option("algebra", in1)->required();
  f_avg->add_option("map", in2)->required();
  f_avg->add_option("-o,--output", out_path);

  // induce -------------------------------------------------------------------
  CLI::App* induce = app.add_subcommand("induce", "induced ternary crossed modules");
  induce->require_subcommand(1);
  CLI::App* i_tcm = induce->add_subcommand("ternary-cm", "from a binary-kind crossed module");
  i_tcm->add_option("crossed-module", in1)->required();
  i_tcm->add_option("--from", from_kind, "triassoc|leibniz")->required();
  i_tcm->add_option("-o,--output", out_path);

  // twist --------------------------------------------------------------------
  CLI::App* twist = app.add_subcommand("twist", "operator twists of crossed modules and actions");
  twist->require_subcommand(1);

  CLI::App* t_rb = twist->add_subcommand(
      "rb", "Rota-Baxter twist (Leibniz crossed module, or weight-0 ternary action)");
  t_rb->add_option("input", in1)->required();
  t_rb->add_option("r-acted", in2)->required();
  t_rb->add_option("r-acting", in3)->required();
  t_rb->add_option("--weight", weight, "weight p/q (default 0)");
  t_rb->add_option("-o,--output", out_path);
  t_rb->add_option("--ternary-out", ternary_out, "path for the induced ternary crossed module");

  CLI::App* t_avg = twist->add_subcommand("averaging", "averaging twist of a triassociative crossed module");
  t_avg->add_option("crossed-module", in1)->required();
  t_avg->add_option("beta-acted", in2)->required();
  t_avg->add_option("beta-acting", in3)->required();
  t_avg->add_option("-o,--output", out_path);

  // prop ---------------------------------------------------------------------
  CLI::App* prop = app.add_subcommand("prop", "structural propositions");
  prop->require_subcommand(1);

  CLI::App* p_shift = prop->add_subcommand("shift", "(x,a) -> (-x, phi(x)+a) morphism report");
  p_shift->add_option("crossed-module", in1)->required();

  CLI::App* p_maps = prop->add_subcommand("semidirect-maps", "three induced semidirect morphisms");
  p_maps->add_option("crossed-module", in1)->required();

  CLI::App* p_props = prop->add_subcommand("cm-properties", "kernel/image structural properties");
  p_props->add_option("crossed-module", in1)->required();

  CLI::App* p_rbeq = prop->add_subcommand("rb-equality", "iterated vs ternary Rota-Baxter bracket");
  p_rbeq->add_option("algebra", in1)->required();
  p_rbeq->add_option("map", in2)->required();
  p_rbeq->add_option("--weight", weight, "weight p/q (default 0)");

  CLI::App* p_tsemi = prop->add_subcommand("t-semidirect", "T(semidirect) = semidirect(T) compatibility");
  p_tsemi->add_option("action", in1)->required();

  // search -------------------------------------------------------------------
  CLI::App* search = app.add_subcommand("search", "exhaustive small searches");
  search->require_subcommand(1);
  CLI::App* s_ops = search->add_subcommand("operators", "grid search for passing operators");
  s_ops->add_option("algebra", in1)->required();
  s_ops->add_option("--kind", operator_name, "rota-baxter|nijenhuis|reynolds|averaging|centroid")
      ->required();
  s_ops->add_option("--weight", weight, "rota-baxter weight p/q (default 0)");
  s_ops->add_option("--grid", grid, "comma-separated entry grid (default -1,0,1)");
  s_ops->add_option("-o,--output", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_structure->parsed()) return finish_report(check_structure(load_algebra(in1)), opts);
    if (c_operator->parsed())
      return finish_report(
          check_operator(load_algebra(in1), load_map(in2), make_operator_kind(operator_name, weight)),
          opts);
    if (c_morphism->parsed())
      return finish_report(check_morphism(load_map(in1), load_algebra(in2), load_algebra(in3)), opts);
    if (c_action->parsed()) return finish_report(action_full_report(load_action(in1)), opts);
    if (c_crossed->parsed()) {
      const CrossedModule cm = load_crossed_module(in1);
      ViolationReport pre = action_full_report(cm.action);
      if (!pre.empty()) return finish_report(pre, opts);
      return finish_report(check_crossed_module(cm), opts);
    }
    if (c_cmorph->parsed())
      return finish_report(check_crossed_morphism(load_map(in1), load_map(in2),
                                                  load_crossed_module(in3), load_crossed_module(in4)),
                           opts);

    if (k_quotient->parsed()) {
      QuotientResult q = quotient(load_algebra(in1), load_subspace(in2));
      emit(Document(std::move(q.algebra)), out_path);
      return kExitOk;
    }
    if (k_dsum->parsed()) {
      emit(Document(direct_sum(load_algebra(in1), load_algebra(in2))), out_path);
      return kExitOk;
    }
    if (k_semi->parsed()) {
      emit(Document(semidirect(load_action(in1))), out_path);
      return kExitOk;
    }
    if (k_ideal->parsed()) {
      emit(Document(crossed_from_ideal(load_algebra(in1), load_subspace(in2))), out_path);
      return kExitOk;
    }

    if (derive->parsed()) {
      emit(Document(derive_from_operator(load_algebra(in1), load_map(in2),
                                         make_operator_kind(operator_name, weight))),
           out_path);
      return kExitOk;
    }

    if (f_ttri->parsed()) {
      emit(Document(t_from_triassoc(load_algebra(in1), ternary_variant_from_string(variant))),
           out_path);
      return kExitOk;
    }
    if (f_tleib->parsed()) {
      emit(Document(t_from_leibniz(load_algebra(in1))), out_path);
      return kExitOk;
    }
    if (f_swap->parsed()) {
      emit(Document(swap_ternary_orientation(load_algebra(in1))), out_path);
      return kExitOk;
    }
    if (f_opp->parsed()) {
      emit(Document(opposite_triassociative(load_algebra(in1))), out_path);
      return kExitOk;
    }
    if (f_avg->parsed()) {
      emit(Document(ternary_from_assoc_averaging(load_algebra(in1), load_map(in2))), out_path);
      return kExitOk;
    }

    if (i_tcm->parsed()) {
      const CrossedModule cm = load_crossed_module(in1);
      CrossedModule induced = [&] {
        if (from_kind == "triassoc") return induce_ternary_cm_from_triassoc(cm);
        if (from_kind == "leibniz") return induce_ternary_cm_from_leibniz(cm);
        throw Error("--from must be 'triassoc' or 'leibniz'");
      }();
      emit(Document(std::move(induced)), out_path);
      return kExitOk;
    }

    if (t_rb->parsed()) {
      const Document input = load_document(in1);
      const Mat r_acted = load_map(in2), r_acting = load_map(in3);
      if (const CrossedModule* cm = std::get_if<CrossedModule>(&input)) {
        auto [twisted, ternary] =
            rb_twist_leibniz_cm(*cm, r_acted, r_acting, Rational::parse(weight));
        emit(Document(std::move(twisted)), out_path);
        if (ternary_out) {
          save_document(Document(std::move(ternary)), *ternary_out);
          std::cout << "written " << *ternary_out << "\n";
        }
        return kExitOk;
      }
      if (const Action* act = std::get_if<Action>(&input)) {
        if (Rational::parse(weight) != Rational(0))
          throw Error("the ternary action twist is the weight-0 form; omit --weight");
        emit(Document(rb_twist_ternary_action(*act, r_acted, r_acting)), out_path);
        return kExitOk;
      }
      throw Error(in1 + ": expected a crossed-module or action document");
    }
    if (t_avg->parsed()) {
      emit(Document(averaging_twist_triassoc_cm(load_crossed_module(in1), load_map(in2),
                                                load_map(in3))),
           out_path);
      return kExitOk;
    }

    if (p_shift->parsed()) return finish_report(shift_morphism_check(load_crossed_module(in1)), opts);
    if (p_maps->parsed())
      return finish_report(semidirect_morphism_maps(load_crossed_module(in1)), opts);
    if (p_props->parsed()) {
      const CrossedModuleProperties props = crossed_module_properties(load_crossed_module(in1));
      if (opts.json) {
        std::cout << "{\"schema\":\"trialab/report@1\",\"ker_in_ann\":"
                  << (props.kernel_in_annihilator ? "true" : "false")
                  << ",\"image_is_ideal\":" << (props.image_is_ideal ? "true" : "false")
                  << ",\"image_acts_trivially_on_ann\":"
                  << (props.image_acts_trivially_on_annihilator ? "true" : "false") << "}\n";
      } else {
        std::cout << "ker-in-ann: " << (props.kernel_in_annihilator ? "true" : "false") << "\n"
                  << "image-is-ideal: " << (props.image_is_ideal ? "true" : "false") << "\n"
                  << "image-acts-trivially-on-ann: "
                  << (props.image_acts_trivially_on_annihilator ? "true" : "false") << "\n";
      }
      return props.all() ? kExitOk : kExitViolations;
    }
    if (p_rbeq->parsed())
      return finish_bool(rb_iterated_vs_ternary(load_algebra(in1), load_map(in2),
                                                Rational::parse(weight)),
                         opts, "equal");
    if (p_tsemi->parsed())
      return finish_bool(functor_semidirect_compat(load_action(in1)), opts, "equal");

    if (s_ops->parsed()) {
      const Algebra a = load_algebra(in1);
      const std::vector<Mat> found =
          search_operators(a, make_operator_kind(operator_name, weight), parse_grid(grid));
      if (out_path) {
        std::ostringstream os;
        os << "{\n  \"schema\": \"trialab/search-results@1\",\n  \"operators\": [";
        for (std::size_t n = 0; n < found.size(); ++n) {
          if (n) os << ",";
          os << "\n";
          std::string text = document_to_text(Document(found[n]));
          if (!text.empty() && text.back() == '\n') text.pop_back();
          os << "    " << text;
        }
        os << "\n  ]\n}\n";
        std::ofstream f(*out_path);
        if (!f) throw Error(*out_path + ": cannot open file for writing");
        f << os.str();
        std::cout << "written " << *out_path << "\n";
      }
      std::cout << "found " << found.size() << " operator(s)\n";
      if (!out_path)
        for (const Mat& m : found) {
          std::cout << "[";
          bool first = true;
          for (Index r = 0; r < m.rows(); ++r)
            for (Index c = 0; c < m.cols(); ++c) {
              if (m(r, c).is_zero()) continue;
              if (!first) std::cout << ", ";
              first = false;
              std::cout << "[" << r << "," << c << ",\"" << m(r, c).str() << "\"]";
            }
          std::cout << "]\n";
        }
      return kExitOk;
    }

    std::cerr << "error: no subcommand selected\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
