#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "spinform/data_io.hpp"
#include "spinform/openbook.hpp"
#include "spinform/report.hpp"
#include "spinform/version.hpp"

namespace {

using namespace spinform;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInconsistentInput = 2;
constexpr int kExitGuardRefusal = 3;
constexpr int kExitSchemaError = 4;

struct Output {
  std::string path;  // empty = stdout

  void emit(const json& report) const {
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) throw SchemaError("cannot write output file: " + path);
      out << text;
    }
  }
};

Ring parse_ring(const std::string& s) {
  if (s == "z2") return Ring::Z2;
  if (s == "z") return Ring::Z;
  throw SchemaError("--ring must be z2 or z");
}

PlumbingDescriptor load_descriptor_with_digest(const std::string& path, std::string& digest) {
  const std::string bytes = read_file(path);
  digest = fnv1a_digest(bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw SchemaError(path + ": not valid JSON");
  return parse_descriptor(j);
}

FactStore run_engine(const PlumbingDescriptor& d) {
  return thm3_propagate(d, trick_seeds(d));
}

int cmd_qform(const std::string& path, const Output& out) {
  std::string digest;
  const PlumbingDescriptor d = load_descriptor_with_digest(path, digest);
  const QuadraticForm q = rokhlin_form(d);

  json report = report_skeleton("qform", digest);
  report["descriptor"] = d.name;
  report["surface"] = {{"g", d.surface.genus}, {"b", d.surface.boundary_components}};
  report["form"] = form_to_json(q);
  json values = json::object();
  const auto labels = d.surface.basis_labels();
  for (size_t i = 0; i < labels.size(); ++i)
    values[labels[i]] = q.basis_values.get(int(i));
  report["values"] = values;
  if (d.surface.genus >= 1) report["arf"] = arf(q);
  out.emit(report);
  return kExitOk;
}

int cmd_obstruct(const std::string& path, const std::vector<std::string>& curve_names,
                 const Output& out) {
  std::string digest;
  const PlumbingDescriptor d = load_descriptor_with_digest(path, digest);
  FactStore facts = run_engine(d);

  std::optional<QuadraticForm> q;
  try {
    q = rokhlin_form(d);
  } catch (const IncompleteBasisError&) {
    // No spanning assignment: tricks and propagation still apply.
  } catch (const InapplicableError&) {
    // Not characteristic: the form-based obstructions stay silent.
  }

  json report = report_skeleton("obstruct", digest);
  report["descriptor"] = d.name;
  report["form_available"] = q.has_value();
  json out_facts = json::array();
  for (const auto& name : curve_names) {
    HomologyClass cls = HomologyClass::zero(d.surface);
    if (d.homology_assignment.count(name)) {
      cls = d.class_of(name);
    } else {
      bool found = false;
      for (const auto& c : d.curves)
        if (c.name == name) {
          cls = c.homology;
          found = true;
          break;
        }
      if (!found) throw UnknownCurveError("no node or curve named " + name);
    }
    facts.ensure(name, cls);
    if (q.has_value() && !cls.is_zero_mod2()) {
      const ExtendibilityFact obstruction =
          cls.is_boundary_parallel()
              ? obstruct_boundary_parallel(*q, name, cls, d.ambient)
              : obstruct_essential(*q, name, cls, true, d.characteristic());
      if (obstruction.status != Status::Unknown)
        facts.upgrade(name, obstruction.status, obstruction.rationale);
    }
    out_facts.push_back(fact_to_json(facts.fact(name)));
  }
  report["facts"] = out_facts;
  out.emit(report);
  return kExitOk;
}

int cmd_propagate(const std::string& path, const Output& out) {
  std::string digest;
  const PlumbingDescriptor d = load_descriptor_with_digest(path, digest);
  const FactStore facts = run_engine(d);

  json report = report_skeleton("propagate", digest);
  report["descriptor"] = d.name;
  json out_facts = json::array();
  for (const auto& f : facts.all()) out_facts.push_back(fact_to_json(f));
  report["facts"] = out_facts;
  if (!d.curves.empty()) {
    json framings = json::object();
    for (const auto& c : d.curves) framings[c.name] = traversal_framing(c, d);
    report["traversal_framings"] = framings;
  }
  out.emit(report);
  return kExitOk;
}

int cmd_flexibility(int g, int b, const std::string& ambient, const Output& out) {
  const SurfaceSignature s(g, b);
  const Ambient amb = ambient_from_string(ambient);
  json report = report_skeleton("flexibility", "");
  report["g"] = g;
  report["b"] = b;
  report["ambient"] = ambient_name(amb);
  report["verdict"] = flex_verdict_name(flexibility_verdict(s, amb));
  out.emit(report);
  return kExitOk;
}

int cmd_slice_obstruction(const std::string& path, const std::string& catalog_name,
                          const Output& out) {
  std::string digest;
  const PlumbingDescriptor d = load_descriptor_with_digest(path, digest);
  const FactStore facts = run_engine(d);

  CurveCatalog catalog;
  if (std::filesystem::exists(catalog_name)) {
    catalog = load_catalog(catalog_name);
  } else {
    catalog = load_catalog(data_dir() / "catalogs" / (catalog_name + ".json"));
  }
  const SliceVerdict verdict = slice_obstruction(d, facts, catalog);

  json report = report_skeleton("slice-obstruction", digest);
  report["descriptor"] = d.name;
  report["catalog"] = catalog.name;
  report["verdict"] = slice_verdict_name(verdict);
  json out_facts = json::array();
  for (const auto& f : facts.all()) out_facts.push_back(fact_to_json(f));
  report["facts"] = out_facts;
  out.emit(report);
  return kExitOk;
}

int cmd_generate_check(int g, const std::string& set_name, bool skip_oracle,
                       const Output& out) {
  const CurveCatalog catalog = chain_catalog(g);
  const QuadraticForm q = q_standard(SurfaceSignature(g, 0));
  std::vector<std::pair<std::string, TwistWord>> words;
  if (set_name == "thm5") words = thm5_generators(g);
  else if (set_name == "hirose") words = hirose_generators(g);
  else throw SchemaError("--set must be thm5 or hirose");

  const GenerationReport gen = generated_subgroup_order(words, catalog, q);

  json report = report_skeleton("generate-check", "");
  report["g"] = g;
  report["set"] = set_name;
  report["order"] = gen.order;
  report["preserves_all"] = gen.preserves_all;
  json preserves = json::array();
  for (const auto& [nm, ok] : gen.preserves)
    preserves.push_back({{"name", nm}, {"preserves_q", ok}});
  report["preserves"] = preserves;

  bool mismatch = false;
  if (!skip_oracle && g <= 3) {
    const std::uint64_t oracle = stabilizer_order_oracle(q, g);
    report["oracle_order"] = oracle;
    mismatch = oracle != gen.order;
    report["order_matches_oracle"] = !mismatch;
  }
  out.emit(report);
  return mismatch ? kExitVerificationFailure : kExitOk;
}

CurveCatalog resolve_chain_catalog(const std::string& name) {
  if (name.rfind("chain_g", 0) == 0) return chain_catalog(std::stoi(name.substr(7)));
  return load_catalog(data_dir() / "catalogs" / (name + ".json"));
}

int cmd_verify_identities(const std::string& path, int g_flag, const std::string& ring_name,
                          const Output& out) {
  const std::string bytes = read_file(path);
  const std::string digest = fnv1a_digest(bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw SchemaError(path + ": not valid JSON");
  const ChainFile chains = parse_chains(j);
  if (g_flag > 0 && g_flag != chains.genus)
    throw InvalidInputError("--g does not match the chain file");
  const CurveCatalog catalog = resolve_chain_catalog(chains.catalog);
  const Ring ring = parse_ring(ring_name);

  json report = report_skeleton("verify-identities", digest);
  report["catalog"] = chains.catalog;
  report["g"] = chains.genus;
  report["ring"] = ring_name;
  // The homology representation has Torelli kernel: a pass here is a
  // necessary condition on the printed identity, not MCG equality.
  report["interpretation"] = "verified in the symplectic representation";

  bool any_fail = false;
  json entries = json::array();
  for (const auto& ident : chains.identities) {
    json e;
    e["name"] = ident.name;
    const bool symplectic = verify_identity_symplectic(ident.lhs, ident.rhs, catalog, ring);
    e["symplectic"] = symplectic ? "pass" : "fail";
    any_fail = any_fail || !symplectic;
    if (ident.chain.has_value()) {
      const auto& chain = *ident.chain;
      const bool endpoints =
          (chain.steps.front() == ident.lhs && chain.steps.back() == ident.rhs) ||
          (chain.steps.front() == ident.rhs && chain.steps.back() == ident.lhs);
      try {
        const bool moves_ok = endpoints && verify_rewrite_chain(chain, catalog);
        e["moves"] = moves_ok ? "pass" : "fail";
        any_fail = any_fail || !moves_ok;
      } catch (const UnverifiableMoveError&) {
        e["moves"] = "unverifiable";
      }
    } else {
      e["moves"] = "unverifiable";
    }
    entries.push_back(e);
  }
  report["identities"] = entries;
  out.emit(report);
  return any_fail ? kExitVerificationFailure : kExitOk;
}

int cmd_openbook(const std::string& monodromy_path, const std::string& delta_path,
                 bool page_spin, bool simple, bool kernel_case, const Output& out) {
  VariationData v;
  std::string digest;
  const std::string& path = monodromy_path.empty() ? delta_path : monodromy_path;
  const std::string bytes = read_file(path);
  digest = fnv1a_digest(bytes);
  json j = json::parse(bytes, nullptr, false);
  if (j.is_discarded()) throw SchemaError(path + ": not valid JSON");
  if (!monodromy_path.empty())
    v = variation_from_monodromy(parse_int_matrix(j, "monodromy"));
  else
    v.delta = parse_int_matrix(j, "delta");

  json report = report_skeleton("openbook", digest);
  report["rank"] = v.delta.rows();
  report["homotopy_sphere"] = is_homotopy_sphere(v);
  report["base_identification"] =
      "relative and absolute middle homology identified by the identity";
  report["universality"] =
      universality_name(universality_obstruction(page_spin, simple, v, kernel_case));
  out.emit(report);
  return kExitOk;
}

int cmd_enumerate_forms(int g, int b, const Output& out) {
  const SurfaceSignature s(g, b);
  const IntersectionForm form = IntersectionForm::standard(s);
  std::uint64_t arf0 = 0, arf1 = 0, total = 0;
  enumerate_forms(form, [&](const QuadraticForm& q) {
    ++total;
    if (s.genus >= 1) (arf(q) ? arf1 : arf0)++;
  });
  json report = report_skeleton("enumerate-forms", "");
  report["g"] = g;
  report["b"] = b;
  report["total"] = total;
  if (g >= 1) report["counts"] = {{"arf0", arf0}, {"arf1", arf1}};
  out.emit(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinform: framing calculus and extendibility verdicts for plumbed "
               "surface charts"};
  app.set_version_flag("--version", spinform::kVersion);
  app.require_subcommand(1);

  Output out;
  app.add_option("--out", out.path, "write the JSON report to a file instead of stdout");

  std::string descriptor_path, catalog_name, chains_path, ring_name = "z";
  std::string monodromy_path, delta_path, set_name;
  std::string ambient = "homology_ball_with_S3_boundary";
  std::vector<std::string> curve_names;
  int g = 0, b = 0;
  bool page_spin = false, simple = false, kernel_case = false, skip_oracle = false;

  auto* qform = app.add_subcommand("qform", "form values and Arf invariant of a chart");
  qform->add_option("descriptor", descriptor_path)->required();

  auto* obstruct = app.add_subcommand("obstruct", "extendibility facts for named curves");
  obstruct->add_option("descriptor", descriptor_path)->required();
  obstruct->add_option("--curve", curve_names, "curve names to decide");

  auto* propagate = app.add_subcommand("propagate", "trick seeds plus edge propagation");
  propagate->add_option("descriptor", descriptor_path)->required();

  auto* flexibility = app.add_subcommand("flexibility", "flexible-embedding decision table");
  flexibility->add_option("--g", g)->required();
  flexibility->add_option("--b", b)->required();
  flexibility->add_option("--ambient", ambient);

  auto* slice =
      app.add_subcommand("slice-obstruction", "sliceness obstruction for the boundary link");
  slice->add_option("descriptor", descriptor_path)->required();
  slice->add_option("--catalog", catalog_name)->required();

  auto* gen = app.add_subcommand("generate-check", "stabilizer generation check");
  gen->add_option("--g", g)->required();
  gen->add_option("--set", set_name)->required();
  gen->add_flag("--skip-oracle", skip_oracle);

  auto* verify = app.add_subcommand("verify-identities", "check printed twist identities");
  verify->add_option("chains", chains_path)->required();
  verify->add_option("--g", g);
  verify->add_option("--ring", ring_name, "z or z2");

  auto* openbook = app.add_subcommand("openbook", "variation-map verdicts");
  openbook->add_option("--monodromy", monodromy_path, "JSON integer matrix of the monodromy");
  openbook->add_option("--delta", delta_path, "JSON integer matrix of the variation map");
  openbook->add_flag("--page-spin", page_spin);
  openbook->add_flag("--simple", simple);
  openbook->add_flag("--kernel-case", kernel_case);

  auto* enumerate = app.add_subcommand("enumerate-forms", "census of quadratic refinements");
  enumerate->add_option("--g", g)->required();
  enumerate->add_option("--b", b);

  CLI11_PARSE(app, argc, argv);

  try {
    if (qform->parsed()) return cmd_qform(descriptor_path, out);
    if (obstruct->parsed()) return cmd_obstruct(descriptor_path, curve_names, out);
    if (propagate->parsed()) return cmd_propagate(descriptor_path, out);
    if (flexibility->parsed()) return cmd_flexibility(g, b, ambient, out);
    if (slice->parsed()) return cmd_slice_obstruction(descriptor_path, catalog_name, out);
    if (gen->parsed()) return cmd_generate_check(g, set_name, skip_oracle, out);
    if (verify->parsed()) return cmd_verify_identities(chains_path, g, ring_name, out);
    if (openbook->parsed()) {
      if (monodromy_path.empty() == delta_path.empty())
        throw spinform::SchemaError("openbook needs exactly one of --monodromy / --delta");
      return cmd_openbook(monodromy_path, delta_path, page_spin, simple, kernel_case, out);
    }
    if (enumerate->parsed()) return cmd_enumerate_forms(g, b, out);
  } catch (const spinform::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchemaError;
  } catch (const spinform::GuardError& e) {
    std::cerr << "guard refusal: " << e.what() << "\n";
    return kExitGuardRefusal;
  } catch (const spinform::InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return kExitGuardRefusal;
  } catch (const spinform::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistentInput;
  }
  return kExitOk;
}
