// cech2: validation, Ȟ¹ classification and verification suites.
//
// Exit codes: 0 pass, 1 assertion or validation failure, 2 input error,
// 3 budget exceeded. JSON goes to stdout (or --out), summaries to stderr.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cech2/cohomology.hpp"
#include "cech2/error.hpp"
#include "cech2/exactness.hpp"
#include "cech2/io.hpp"
#include "cech2/nerve.hpp"

using namespace cech2;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2, kBudget = 3;

struct Config {
  std::string space;
  std::string coeff;
  std::string ses;
  std::string out;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> cocycle_budget;
  std::optional<std::uint64_t> witness_budget;
  int levels = 4;
  std::string suite;
  std::vector<std::string> inputs;

  Budget budgets() const {
    Budget b;
    if (budget) b.cocycles = b.witnesses = *budget;
    if (cocycle_budget) b.cocycles = *cocycle_budget;
    if (witness_budget) b.witnesses = *witness_budget;
    return b;
  }
};

bool is_input_error(ErrorCode c) {
  return c == ErrorCode::InvalidInput || c == ErrorCode::UnknownSpace || c == ErrorCode::UnknownGroup;
}

void emit(const Config& cfg, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write '" + cfg.out + "'");
  out << text;
}

// Positional arguments fill --space then --coeff when those were not given.
void take_positionals(Config& cfg, bool space, bool coeff) {
  std::size_t i = 0;
  if (space && cfg.space.empty() && i < cfg.inputs.size()) cfg.space = cfg.inputs[i++];
  if (coeff && cfg.coeff.empty() && i < cfg.inputs.size()) cfg.coeff = cfg.inputs[i++];
  if (i < cfg.inputs.size()) throw Error(ErrorCode::InvalidInput, "unexpected argument '" + cfg.inputs[i] + "'");
}

int finish(const Config& cfg, const std::string& what, const std::vector<Report>& reports, Json extra = Json::object()) {
  Json j = std::move(extra);
  bool ok = true;
  Json arr = Json::array();
  for (const Report& r : reports) {
    ok = ok && r.ok();
    arr.push_back(to_json(r));
  }
  j["ok"] = ok;
  j["reports"] = arr;
  emit(cfg, j);
  for (const Report& r : reports) {
    std::cerr << what << " " << r.suite << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.checks.size() << " checks)\n";
    if (const CheckItem* f = r.first_failure()) std::cerr << "  first failure: " << f->name << " " << f->detail << "\n";
  }
  return ok ? kPass : kFail;
}

// ---------------------------------------------------------------------------

Json validate_document(const Json& doc) {
  if (doc.is_object() && doc.contains("xm0")) {
    const Report r = validate_ses(crossed_module_ses_from_json(doc));
    if (!r.ok()) throw Error(ErrorCode::NotExact, r.first_failure()->name);
    return Json{{"kind", "crossed module sequence"}};
  }
  if (doc.is_object() && doc.contains("K")) {
    group_ses_from_json(doc);
    return Json{{"kind", "group sequence"}};
  }
  if (doc.is_object() && doc.contains("t")) {
    const CrossedModule xm = crossed_module_from_json(doc);
    return Json{{"kind", "crossed module"}, {"name", xm.name()}, {"G", xm.G()->order()}, {"H", xm.H()->order()}};
  }
  if (doc.is_object() && doc.contains("vertices")) {
    const SimplicialComplex c = complex_from_json(doc);
    return Json{{"kind", "complex"}, {"vertices", c.vertex_count()}, {"euler_characteristic", c.euler_characteristic()}};
  }
  if (doc.is_string() || (doc.is_object() && doc.contains("table"))) {
    const GroupPtr g = group_from_json(doc);
    return Json{{"kind", "group"}, {"name", g->name()}, {"order", g->order()}, {"abelian", g->is_abelian()}};
  }
  throw Error(ErrorCode::InvalidInput, "unrecognised document");
}

int cmd_validate(Config& cfg) {
  Json items = Json::array();
  bool ok = true;
  auto record = [&](const std::string& input, auto&& body) {
    Json item{{"input", input}};
    try {
      item.update(body());
      item["ok"] = true;
    } catch (const Error& e) {
      if (is_input_error(e.code()) || e.code() == ErrorCode::BudgetExceeded) throw;
      item["ok"] = false;
      item["error"] = to_string(e.code());
      item["detail"] = e.what();
      ok = false;
    }
    items.push_back(item);
  };
  std::optional<SimplicialComplex> space;
  if (!cfg.space.empty()) {
    space = parse_space(cfg.space);
    items.push_back(Json{{"input", cfg.space}, {"kind", "complex"}, {"ok", true}});
  }
  std::optional<CrossedModule> xm;
  if (!cfg.coeff.empty())
    record(cfg.coeff, [&] {
      xm = parse_coefficients(cfg.coeff);
      return Json{{"kind", "crossed module"}, {"name", xm->name()}};
    });
  if (!cfg.ses.empty()) record(cfg.ses, [&] {
      const Report r = validate_ses(parse_crossed_module_ses(cfg.ses));
      if (!r.ok()) throw Error(ErrorCode::NotExact, r.first_failure()->name);
      return Json{{"kind", "sequence"}};
    });
  for (const std::string& path : cfg.inputs) {
    const Json doc = read_json_file(path);
    if (doc.is_object() && doc.contains("g") && !doc.contains("G")) {
      if (!space || !xm) throw Error(ErrorCode::InvalidInput, "validating a cocycle needs --space and --coeff");
      record(path, [&] {
        const CocycleReport r = validate_cocycle(cocycle_from_json(doc, *space), *space, *xm);
        if (!r.ok) throw Error(r.violation.value_or(ErrorCode::InvalidInput), r.detail);
        return Json{{"kind", "cocycle"}};
      });
      continue;
    }
    record(path, [&] { return validate_document(doc); });
  }
  emit(cfg, Json{{"ok", ok}, {"items", items}});
  for (const Json& item : items)
    if (!item["ok"].get<bool>()) std::cerr << "invalid: " << item["input"].get<std::string>() << ": " << item["detail"].get<std::string>() << "\n";
  std::cerr << "validate: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kPass : kFail;
}

int cmd_h1(Config& cfg) {
  take_positionals(cfg, true, true);
  if (cfg.space.empty() || cfg.coeff.empty()) throw Error(ErrorCode::InvalidInput, "h1 needs a space and coefficients");
  const SimplicialComplex space = parse_space(cfg.space);
  const CrossedModule xm = parse_coefficients(cfg.coeff);
  const Classification c = classify_h1(space, xm, cfg.budgets());
  Json j{{"space", cfg.space}, {"coefficients", xm.name()}};
  j.update(to_json(c));
  emit(cfg, j);
  std::cerr << "h1 " << cfg.space << " " << xm.name() << ": " << c.class_count() << " classes from " << c.space().size()
            << " cocycles\n";
  return kPass;
}

Report hat_iso_report(const CrossedModule& xm) {
  Report r;
  r.suite = "hat-iso";
  const HatConstruction hat = hat_construction(xm);
  const Report rows = validate_ses(hat.ses);
  for (const CheckItem& c : rows.checks) r.add("hat sequence: " + c.name, c.ok, c.detail);
  try {
    const TwoGroupIso iso = iso_hat_check(xm);
    r.add("((g,h),h') -> (g,(h,h'h)) is an isomorphism of 2-groups", true);
    r.figures["objects"] = iso.from.ob()->order();
    r.figures["morphisms"] = iso.from.mor()->order();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IsoCheckFailed) throw;
    r.add("((g,h),h') -> (g,(h,h'h)) is an isomorphism of 2-groups", false, e.what());
  }
  return r;
}

int cmd_verify(Config& cfg) {
  const std::string suite = cfg.suite;
  const Budget budget = cfg.budgets();
  if (suite == "lemma2") {
    take_positionals(cfg, true, false);
    const SimplicialComplex space = parse_space(cfg.space.empty() ? "circle3" : cfg.space);
    const GroupSES ses = parse_group_ses(cfg.ses.empty() ? "z2-z4-z2" : cfg.ses);
    return finish(cfg, "verify", {verify_lemma2(ses, space, budget), lemma2_section_independence(ses, space, budget)},
                  Json{{"suite", suite}});
  }
  if (suite == "lemma3") {
    take_positionals(cfg, true, false);
    const SimplicialComplex space = parse_space(cfg.space.empty() ? "circle3" : cfg.space);
    const CrossedModuleSES ses = parse_crossed_module_ses(cfg.ses.empty() ? "hat:z2-z4" : cfg.ses);
    return finish(cfg, "verify", {verify_lemma3(ses, space, budget)}, Json{{"suite", suite}});
  }
  if (suite == "hat-iso") {
    take_positionals(cfg, false, true);
    const CrossedModule xm = parse_coefficients(cfg.coeff.empty() ? "z2-z4" : cfg.coeff);
    return finish(cfg, "verify", {hat_iso_report(xm), check_interchange(two_group_from_crossed_module(hat_construction(xm).hat))},
                  Json{{"suite", suite}, {"coefficients", xm.name()}});
  }
  if (suite == "refine") {
    take_positionals(cfg, true, true);
    const SimplicialComplex space = parse_space(cfg.space.empty() ? "circle3" : cfg.space);
    const CrossedModule xm = parse_coefficients(cfg.coeff.empty() ? "discrete:Z2" : cfg.coeff);
    const RefineCounts counts = refine_compare(space, xm, budget);
    Report r;
    r.suite = "refine";
    r.figures["original"] = static_cast<std::int64_t>(counts.original);
    r.figures["subdivided"] = static_cast<std::int64_t>(counts.subdivided);
    r.add("class count unchanged by subdivision", counts.original == counts.subdivided,
          std::to_string(counts.original) + " vs " + std::to_string(counts.subdivided));
    return finish(cfg, "verify", {r}, Json{{"suite", suite}, {"coefficients", xm.name()}});
  }
  if (suite == "abelian") {
    take_positionals(cfg, true, true);
    const SimplicialComplex space = parse_space(cfg.space.empty() ? "sphere2" : cfg.space);
    const CrossedModule xm = parse_coefficients(cfg.coeff.empty() ? "shift:Z2" : cfg.coeff);
    if (xm.G()->order() != 1) throw Error(ErrorCode::InvalidInput, "the abelian suite needs shift coefficients H -> 1");
    const std::size_t classes = classify_h1(space, xm, budget).class_count();
    const std::uint64_t oracle = abelian_oracle_h2(space, xm.H());
    Report r;
    r.suite = "abelian";
    r.figures["classes"] = static_cast<std::int64_t>(classes);
    r.figures["oracle"] = static_cast<std::int64_t>(oracle);
    r.add("class count equals |H^2(M; H)|", classes == oracle, std::to_string(classes) + " vs " + std::to_string(oracle));
    return finish(cfg, "verify", {r}, Json{{"suite", suite}, {"coefficients", xm.name()}});
  }
  if (suite == "nerve") {
    take_positionals(cfg, false, true);
    const CrossedModule xm = parse_coefficients(cfg.coeff.empty() ? "z2-z4" : cfg.coeff);
    NerveOptions options;
    options.levels = cfg.levels;
    const TruncatedSimplicialGroup n = nerve_two_group(xm, options);
    return finish(cfg, "verify",
                  {check_simplicial_identities(n), check_level_iso(n, xm), check_composition_formulas(xm),
                   check_interchange(two_group_from_crossed_module(xm))},
                  Json{{"suite", suite}, {"coefficients", xm.name()}});
  }
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + suite + "'");
}

int cmd_nerve(Config& cfg) {
  take_positionals(cfg, false, true);
  const CrossedModule xm = parse_coefficients(cfg.coeff.empty() ? "z2-z4" : cfg.coeff);
  NerveOptions options;
  options.levels = cfg.levels;
  const TruncatedSimplicialGroup n = nerve_two_group(xm, options);
  Json orders = Json::array();
  for (int p = 0; p <= n.top(); ++p) orders.push_back(n.level(p)->order());
  return finish(cfg, "nerve", {check_simplicial_identities(n)},
                Json{{"coefficients", xm.name()}, {"level_orders", orders}, {"kernel_order", n.kernel_order()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Čech cohomology with coefficients in finite 2-groups"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--space", cfg.space, "standard space name or complex JSON file");
    sub->add_option("--coeff", cfg.coeff, "discrete:G, shift:H, aut:H, hat:SPEC, z2-z4 or crossed-module JSON file");
    sub->add_option("--budget", cfg.budget, "cap on both cocycle candidates and witnesses");
    sub->add_option("--cocycle-budget", cfg.cocycle_budget, "cap on cocycle candidates");
    sub->add_option("--witness-budget", cfg.witness_budget, "cap on witnesses");
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };
  CLI::App* validate = app.add_subcommand("validate", "validate groups, crossed modules, sequences, complexes, cocycles");
  common(validate);
  validate->add_option("--ses", cfg.ses, "sequence to validate");
  validate->add_option("inputs", cfg.inputs, "JSON documents");

  CLI::App* h1 = app.add_subcommand("h1", "classify cocycles up to coboundary");
  common(h1);
  h1->add_option("inputs", cfg.inputs, "[SPACE] [COEFF]");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("suite", cfg.suite, "lemma2 | lemma3 | hat-iso | refine | abelian | nerve")->required();
  verify->add_option("--ses", cfg.ses, "z2-z4-z2, z3-z3-1, hat:COEFF or sequence JSON file");
  verify->add_option("--levels", cfg.levels, "nerve truncation level")->check(CLI::Range(0, 6));
  verify->add_option("inputs", cfg.inputs, "[SPACE] [COEFF]");

  CLI::App* nerve = app.add_subcommand("nerve", "truncated nerve and simplicial identities");
  common(nerve);
  nerve->add_option("--levels", cfg.levels, "truncation level")->check(CLI::Range(0, 6));
  nerve->add_option("inputs", cfg.inputs, "[COEFF]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*validate) return cmd_validate(cfg);
    if (*h1) return cmd_h1(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*nerve) return cmd_nerve(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::BudgetExceeded) return kBudget;
    return is_input_error(e.code()) ? kInput : kFail;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
