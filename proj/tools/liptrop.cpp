#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "liptrop/io.hpp"
#include "liptrop/verify.hpp"

namespace {

using liptrop::io::json;

struct CliOptions {
  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  int samples = 1000;
  int order_cap_flag = -1;  // -1 = not given on the command line

  int order_cap() const {
    if (order_cap_flag > 0) return order_cap_flag;
    if (const char* env = std::getenv("LIPTROP_ORDER_CAP")) {
      try {
        int cap = std::stoi(env);
        if (cap > 0) return cap;
      } catch (const std::exception&) {
        throw liptrop::Error(liptrop::Errc::parse_error,
                             std::string("LIPTROP_ORDER_CAP: bad value '") + env + "'");
      }
    }
    return liptrop::default_order_cap;
  }

  liptrop::RunConfig run_config() const {
    liptrop::RunConfig config;
    config.seed = seed;
    config.samples = samples;
    config.order_cap = order_cap();
    return config;
  }
};

void emit(const CliOptions& options, const std::string& text, const json& doc) {
  std::string payload = options.format == "json" ? doc.dump(2) + "\n" : text;
  if (options.output.empty()) {
    std::cout << payload;
  } else {
    liptrop::io::write_file_atomically(options.output, payload);
  }
}

std::string values_line(const std::vector<liptrop::Rational>& values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) line += ' ';
    line += values[i].str();
  }
  return line;
}

int run_group_validate(const CliOptions& options, const std::string& path) {
  try {
    liptrop::GroupPtr group = liptrop::io::load_group(path);
    json doc;
    doc["valid"] = true;
    doc["name"] = group->name();
    doc["order"] = group->order();
    doc["identity"] = group->identity();
    doc["abelian"] = group->abelian();
    doc["inverses"] = group->inverses();
    doc["element_orders"] = group->element_order_multiset();
    std::string text = "valid: order=" + std::to_string(group->order()) +
                       " identity=" + std::to_string(group->identity()) +
                       (group->abelian() ? " abelian" : " nonabelian") + "\n";
    emit(options, text, doc);
    return 0;
  } catch (const liptrop::Error& e) {
    if (e.code() == liptrop::Errc::parse_error) throw;
    json doc;
    doc["valid"] = false;
    doc["error"] = liptrop::errc_name(e.code());
    doc["message"] = e.what();
    emit(options, std::string("invalid: ") + e.what() + "\n", doc);
    return 1;
  }
}

int run_group_autos(const CliOptions& options, const std::string& path) {
  liptrop::GroupPtr group = liptrop::io::load_group(path);
  std::vector<liptrop::GroupIso> autos =
      liptrop::enumerate_automorphisms(group, options.order_cap());
  json doc;
  doc["count"] = autos.size();
  json maps = json::array();
  std::string text = "automorphisms: " + std::to_string(autos.size()) + "\n";
  for (const liptrop::GroupIso& iso : autos) {
    maps.push_back(iso.map);
    text += "  [";
    for (std::size_t i = 0; i < iso.map.size(); ++i) {
      if (i > 0) text += ' ';
      text += std::to_string(iso.map[i]);
    }
    text += "]\n";
  }
  doc["maps"] = std::move(maps);
  emit(options, text, doc);
  return 0;
}

int run_group_iso(const CliOptions& options, const std::string& left, const std::string& right) {
  liptrop::GroupPtr g = liptrop::io::load_group(left);
  liptrop::GroupPtr h = liptrop::io::load_group(right);
  liptrop::IsoDecision decision = liptrop::decide_monoid_iso(g, h, options.order_cap());
  json doc;
  doc["isomorphic"] = decision.isomorphic;
  doc["reason"] = liptrop::iso_reason_name(decision.reason);
  std::string text = std::string("isomorphic: ") + (decision.isomorphic ? "true" : "false") + "\n";
  if (decision.witness) {
    doc["witness"] = decision.witness->map;
    text += "witness: [";
    for (std::size_t i = 0; i < decision.witness->map.size(); ++i) {
      if (i > 0) text += ' ';
      text += std::to_string(decision.witness->map[i]);
    }
    text += "]\n";
  }
  if (!decision.certificate.empty()) {
    doc["certificate"] = decision.certificate;
    text += "certificate: " + std::string(liptrop::iso_reason_name(decision.reason)) + ": " +
            decision.certificate + "\n";
  }
  emit(options, text, doc);
  return decision.isomorphic ? 0 : 1;
}

bool star_applicable(const liptrop::Context& ctx) {
  if (ctx.group().identity() != 0) return false;
  for (int i = 0; i < ctx.order(); ++i) {
    for (int j = 0; j < ctx.order(); ++j) {
      if (i != j && ctx.metric().dist(i, j) != liptrop::Rational(1)) return false;
    }
  }
  return true;
}

int run_fn_conv(const CliOptions& options, const std::string& ctx_path, const std::string& f_path,
                const std::string& g_path) {
  liptrop::Context ctx = liptrop::io::load_context(ctx_path);
  liptrop::LipFn f = liptrop::io::load_fn(f_path, ctx);
  liptrop::LipFn g = liptrop::io::load_fn(g_path, ctx);
  liptrop::LipFn result = liptrop::inf_conv(f, g);
  json doc;
  doc["values"] = liptrop::io::rationals_to_json(result.values());
  emit(options, values_line(result.values()) + "\n", doc);
  return 0;
}

int run_fn_units(const CliOptions& options, const std::string& ctx_path,
                 const std::string& cone_name_text) {
  liptrop::Context ctx = liptrop::io::load_context(ctx_path);
  std::optional<liptrop::Cone> cone = liptrop::parse_cone(cone_name_text);
  if (!cone) {
    throw liptrop::Error(liptrop::Errc::unsupported_cone, "unknown cone '" + cone_name_text + "'");
  }
  liptrop::UnitsDescription units = liptrop::units_of(ctx, *cone, options.seed);
  json doc;
  doc["cone"] = liptrop::cone_name(*cone);
  doc["parametric"] = units.parametric;
  doc["count"] = units.deltas.size();
  json deltas = json::array();
  std::string text;
  if (units.parametric) {
    text += "family: r + delta_x for x in G, r rational; delta basis:\n";
  }
  for (const liptrop::LipFn& d : units.deltas) {
    deltas.push_back(liptrop::io::rationals_to_json(d.values()));
    text += values_line(d.values()) + "\n";
  }
  doc["units"] = std::move(deltas);
  text += "count: " + std::to_string(units.deltas.size()) + "\n";
  if (units.parametric) {
    bool all_hold = true;
    json witnesses = json::array();
    for (const auto& w : units.witnesses) {
      all_hold = all_hold && w.law_holds;
      json entry;
      entry["x"] = w.x;
      entry["r"] = w.r.str();
      entry["y"] = w.y;
      entry["s"] = w.s.str();
      entry["law_holds"] = w.law_holds;
      witnesses.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(witnesses);
    text += std::string("group law on ") + std::to_string(units.witnesses.size()) +
            " samples: " + (all_hold ? "pass" : "fail") + "\n";
  }
  emit(options, text, doc);
  return 0;
}

int run_fn_tau(const CliOptions& options, const std::string& ctx_path, const std::string& f_path) {
  liptrop::Context ctx = liptrop::io::load_context(ctx_path);
  liptrop::LipFn f = liptrop::io::load_fn(f_path, ctx);
  liptrop::TauPair pair = liptrop::tau(f);
  json doc;
  doc["base"] = liptrop::io::rationals_to_json(pair.base.values());
  doc["offset"] = pair.offset.str();
  emit(options,
       "base: " + values_line(pair.base.values()) + "\noffset: " + pair.offset.str() + "\n", doc);
  return 0;
}

int run_fn_classify(const CliOptions& options, const std::string& ctx_path,
                    const std::string& f_path) {
  liptrop::Context ctx = liptrop::io::load_context(ctx_path);
  liptrop::LipFn f = liptrop::io::load_fn(f_path, ctx);
  liptrop::ConeSet tags = liptrop::classify(f);
  json doc;
  json cones = json::array();
  std::string text = "cones:";
  for (liptrop::Cone cone :
       {liptrop::Cone::lip, liptrop::Cone::lip1, liptrop::Cone::lip1plus, liptrop::Cone::lip10}) {
    if (tags.contains(cone)) {
      cones.push_back(liptrop::cone_name(cone));
      text += std::string(" ") + liptrop::cone_name(cone);
    }
  }
  doc["cones"] = std::move(cones);
  text += "\n";
  if (star_applicable(ctx)) {
    liptrop::StarContext star_ctx(ctx.group_ptr());
    const char* tag =
        liptrop::star_membership_name(liptrop::membership(star_ctx, liptrop::RnVector{f.values()}));
    doc["membership"] = tag;
    text += std::string("membership: ") + tag + "\n";
  }
  emit(options, text, doc);
  return 0;
}

int run_fn_regularize(const CliOptions& options, const std::string& ctx_path,
                      const std::string& f_path) {
  liptrop::Context ctx = liptrop::io::load_context(ctx_path);
  liptrop::LipFn f = liptrop::io::load_fn(f_path, ctx);
  liptrop::LipFn result = liptrop::lip_regularize(f);
  json doc;
  doc["values"] = liptrop::io::rationals_to_json(result.values());
  doc["fixed_point"] = result == f;
  emit(options, values_line(result.values()) + "\n", doc);
  return 0;
}

int run_verify(const CliOptions& options, const std::string& suite,
               const std::vector<std::string>& context_paths) {
  liptrop::RunConfig config = options.run_config();
  liptrop::Context x = liptrop::io::load_context(context_paths[0]);
  std::optional<liptrop::Context> y;
  if (context_paths.size() > 1) y = liptrop::io::load_context(context_paths[1]);

  liptrop::Report report;
  if (suite == "all") {
    report = liptrop::all_suite(x, y, config);
  } else if (suite == "monoid") {
    report = liptrop::monoid_suite(x, config);
    if (y) report.merge(liptrop::monoid_suite(*y, config), "y:");
  } else if (suite == "units") {
    report = liptrop::units_suite(x, config);
    if (y) report.merge(liptrop::units_suite(*y, config), "y:");
  } else if (suite == "banachstone") {
    report = liptrop::banachstone_suite(x, y ? *y : x, config);
  } else if (suite == "lemmas") {
    report = liptrop::lemmas_suite(x, y ? *y : x, config);
  } else {
    throw liptrop::Error(liptrop::Errc::parse_error, "unknown suite '" + suite + "'");
  }

  json doc;
  doc["suite"] = suite;
  doc["seed"] = config.seed;
  doc["samples"] = config.samples;
  doc["order_cap"] = config.order_cap;
  json contexts = json::array();
  contexts.push_back(x.label());
  if (y) contexts.push_back(y->label());
  doc["contexts"] = std::move(contexts);
  doc["checks"] = liptrop::io::report_to_json(report);
  doc["all_pass"] = report.all_pass();

  std::string text;
  for (const liptrop::CheckResult& c : report.checks) {
    text += c.pass ? "[PASS] " : "[FAIL] ";
    text += c.check + " (" + std::to_string(c.samples) + " samples)";
    if (!c.witness.empty()) text += ": " + c.witness;
    text += "\n";
  }
  text += std::string("result: ") + (report.all_pass() ? "all checks passed" : "FAILURES") + "\n";
  emit(options, text, doc);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inf-convolution monoid laboratory over finite invariant metric groups"};
  app.require_subcommand(1);

  CliOptions options;
  app.add_option("--format", options.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", options.output, "Write output to this file (atomically)");
  app.add_option("--seed", options.seed, "Sampling seed");
  app.add_option("--samples", options.samples, "Samples per property check")
      ->check(CLI::PositiveNumber);
  app.add_option("--order-cap", options.order_cap_flag,
                 "Group order cap (overrides LIPTROP_ORDER_CAP)");

  std::string path_a, path_b, path_c, cone_text = "lip1plus";

  CLI::App* group = app.add_subcommand("group", "Group validation and isomorphism");
  group->fallthrough();
  group->require_subcommand(1);
  CLI::App* group_validate = group->add_subcommand("validate", "Check all group invariants");
  group_validate->fallthrough();
  group_validate->add_option("group", path_a, "Group JSON file")->required();
  CLI::App* group_autos = group->add_subcommand("autos", "Enumerate the automorphism group");
  group_autos->fallthrough();
  group_autos->add_option("group", path_a, "Group JSON file")->required();
  CLI::App* group_iso = group->add_subcommand("iso", "Decide monoid/group isomorphism");
  group_iso->fallthrough();
  group_iso->add_option("left", path_a, "First group JSON file")->required();
  group_iso->add_option("right", path_b, "Second group JSON file")->required();

  CLI::App* fn = app.add_subcommand("fn", "Operations on functions over a context");
  fn->fallthrough();
  fn->require_subcommand(1);
  CLI::App* fn_conv = fn->add_subcommand("conv", "Inf-convolution of two functions");
  fn_conv->fallthrough();
  fn_conv->add_option("context", path_a, "Group or metric JSON file")->required();
  fn_conv->add_option("f", path_b, "Function JSON file")->required();
  fn_conv->add_option("g", path_c, "Function JSON file")->required();
  CLI::App* fn_units = fn->add_subcommand("units", "Unit group of a cone");
  fn_units->fallthrough();
  fn_units->add_option("context", path_a, "Group or metric JSON file")->required();
  fn_units->add_option("--cone", cone_text, "lip10, lip1plus or lip1");
  CLI::App* fn_tau = fn->add_subcommand("tau", "Tau decomposition (f - inf f, inf f)");
  fn_tau->fallthrough();
  fn_tau->add_option("context", path_a, "Group or metric JSON file")->required();
  fn_tau->add_option("f", path_b, "Function JSON file")->required();
  CLI::App* fn_classify = fn->add_subcommand("classify", "Cone membership tags");
  fn_classify->fallthrough();
  fn_classify->add_option("context", path_a, "Group or metric JSON file")->required();
  fn_classify->add_option("f", path_b, "Function JSON file")->required();
  CLI::App* fn_regularize = fn->add_subcommand("regularize", "Largest 1-Lipschitz minorant");
  fn_regularize->fallthrough();
  fn_regularize->add_option("context", path_a, "Group or metric JSON file")->required();
  fn_regularize->add_option("f", path_b, "Function JSON file")->required();

  std::string suite;
  std::vector<std::string> verify_contexts;
  CLI::App* verify = app.add_subcommand("verify", "Run the seeded property suites");
  verify->fallthrough();
  verify->add_option("suite", suite, "all, monoid, units, banachstone or lemmas")
      ->required()
      ->check(CLI::IsMember({"all", "monoid", "units", "banachstone", "lemmas"}));
  verify->add_option("contexts", verify_contexts, "One or two context JSON files")
      ->required()
      ->expected(1, 2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (group_validate->parsed()) return run_group_validate(options, path_a);
    if (group_autos->parsed()) return run_group_autos(options, path_a);
    if (group_iso->parsed()) return run_group_iso(options, path_a, path_b);
    if (fn_conv->parsed()) return run_fn_conv(options, path_a, path_b, path_c);
    if (fn_units->parsed()) return run_fn_units(options, path_a, cone_text);
    if (fn_tau->parsed()) return run_fn_tau(options, path_a, path_b);
    if (fn_classify->parsed()) return run_fn_classify(options, path_a, path_b);
    if (fn_regularize->parsed()) return run_fn_regularize(options, path_a, path_b);
    if (verify->parsed()) return run_verify(options, suite, verify_contexts);
  } catch (const liptrop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == liptrop::Errc::parse_error) return 2;
    return verify->parsed() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
