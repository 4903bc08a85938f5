#include "spinform/data_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace spinform {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SPINFORM_DATA_DIR"); env && *env)
    return std::filesystem::path(env);
#ifdef SPINFORM_DEFAULT_DATA_DIR
  return std::filesystem::path(SPINFORM_DEFAULT_DATA_DIR);
#else
  return std::filesystem::path("data");
#endif
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

json parse_json_text(const std::string& text, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError(what + ": not valid JSON");
  return j;
}

const json& need(const json& j, const std::string& field, const std::string& ctx) {
  auto it = j.find(field);
  if (it == j.end()) throw SchemaError(ctx + ": missing field '" + field + "'");
  return *it;
}

Int need_int(const json& j, const std::string& field, const std::string& ctx) {
  const json& v = need(j, field, ctx);
  if (!v.is_number_integer()) throw SchemaError(ctx + ": field '" + field + "' must be an integer");
  return v.get<Int>();
}

std::string need_str(const json& j, const std::string& field, const std::string& ctx) {
  const json& v = need(j, field, ctx);
  if (!v.is_string()) throw SchemaError(ctx + ": field '" + field + "' must be a string");
  return v.get<std::string>();
}

bool opt_bool(const json& j, const std::string& field, bool dflt, const std::string& ctx) {
  auto it = j.find(field);
  if (it == j.end()) return dflt;
  if (!it->is_boolean()) throw SchemaError(ctx + ": field '" + field + "' must be a boolean");
  return it->get<bool>();
}

SurfaceSignature parse_surface(const json& j, const std::string& ctx) {
  const json& s = need(j, "surface", ctx);
  return SurfaceSignature(int(need_int(s, "g", ctx + ".surface")),
                          int(need_int(s, "b", ctx + ".surface")));
}

HomologyClass parse_class(const json& v, SurfaceSignature s, const std::string& ctx) {
  if (!v.is_array()) throw SchemaError(ctx + ": homology class must be an array of integers");
  std::vector<Int> coords;
  coords.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw SchemaError(ctx + ": class entries must be integers");
    coords.push_back(e.get<Int>());
  }
  if (int(coords.size()) != s.rank())
    throw SchemaError(ctx + ": class length " + std::to_string(coords.size()) +
                      " does not match surface rank " + std::to_string(s.rank()));
  return HomologyClass::from_coords(s, coords);
}

TwistWord parse_word(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw SchemaError(ctx + ": word must be an array of [curve, exponent]");
  TwistWord w;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
      throw SchemaError(ctx + ": letters must be [curve, exponent] pairs");
    const Int exp = e[1].get<Int>();
    if (exp == 0) throw SchemaError(ctx + ": zero exponent");
    w.append(e[0].get<std::string>(), int(exp));
  }
  return w;
}

}  // namespace

PlumbingDescriptor parse_descriptor(const json& j) {
  const std::string ctx = "descriptor";
  PlumbingDescriptor d;
  if (j.contains("name")) d.name = need_str(j, "name", ctx);
  d.surface = parse_surface(j, ctx);

  const json& amb = need(j, "ambient", ctx);
  if (amb.is_string()) {
    d.ambient = ambient_from_string(amb.get<std::string>());
  } else if (amb.is_object() && amb.contains("other")) {
    d.ambient = Ambient::Other;
    d.ambient_other_name = amb["other"].get<std::string>();
  } else {
    throw SchemaError(ctx + ": ambient must be a known name or {\"other\": name}");
  }
  d.assert_characteristic = opt_bool(j, "assert_characteristic", false, ctx);

  const json& nodes = need(j, "nodes", ctx);
  if (!nodes.is_array() || nodes.empty()) throw SchemaError(ctx + ": nodes must be a nonempty array");
  for (const auto& n : nodes) {
    AnnulusNode node;
    node.label = need_str(n, "label", ctx + ".nodes");
    node.twist = need_int(n, "twist", ctx + ".nodes[" + node.label + "]");
    node.core_unknotted = opt_bool(n, "core_unknotted", false, ctx);
    node.core_slice = opt_bool(n, "core_slice", false, ctx);
    if (n.contains("bounds_handle") && !n["bounds_handle"].is_null()) {
      if (!n["bounds_handle"].is_number_integer())
        throw SchemaError(ctx + ": bounds_handle must be an integer or null");
      node.bounds_handle = n["bounds_handle"].get<Int>();
    }
    d.nodes.push_back(std::move(node));
  }

  const json& assignment = need(j, "basis_assignment", ctx);
  if (!assignment.is_object()) throw SchemaError(ctx + ": basis_assignment must be an object");
  for (const auto& [label, coords] : assignment.items())
    d.homology_assignment.emplace(label,
                                  parse_class(coords, d.surface, ctx + ".basis_assignment." + label));
  for (const auto& n : d.nodes)
    if (!d.homology_assignment.count(n.label))
      throw SchemaError(ctx + ": node " + n.label + " has no basis_assignment entry");

  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      PlumbingEdge edge;
      edge.a = need_str(e, "a", ctx + ".edges");
      edge.b = need_str(e, "b", ctx + ".edges");
      edge.sign = int(need_int(e, "sign", ctx + ".edges"));
      edge.tau_ab_unknot = opt_bool(e, "tau_ab_unknot", false, ctx);
      edge.tau_ba_unknot = opt_bool(e, "tau_ba_unknot", false, ctx);
      d.edges.push_back(std::move(edge));
    }
  }

  if (j.contains("curves")) {
    for (const auto& c : j["curves"]) {
      TraversalCurve curve;
      curve.name = need_str(c, "name", ctx + ".curves");
      const std::string cctx = ctx + ".curves[" + curve.name + "]";
      curve.homology = parse_class(need(c, "homology", cctx), d.surface, cctx);
      if (c.contains("declared_crossing_sum"))
        curve.declared_crossing_sum = need_int(c, "declared_crossing_sum", cctx);
      for (const auto& p : need(c, "passes", cctx)) {
        CurvePass pass;
        pass.node = need_str(p, "node", cctx + ".passes");
        pass.multiplicity = int(need_int(p, "multiplicity", cctx + ".passes"));
        pass.crosses_twist = opt_bool(p, "crosses_twist", true, cctx);
        curve.passes.push_back(std::move(pass));
      }
      d.curves.push_back(std::move(curve));
    }
  }

  d.validate();
  return d;
}

PlumbingDescriptor load_descriptor(const std::filesystem::path& path) {
  return parse_descriptor(parse_json_text(read_file(path), path.string()));
}

CurveCatalog parse_catalog(const json& j) {
  const std::string ctx = "catalog";
  CurveCatalog cat;
  cat.name = need_str(j, "name", ctx);
  cat.surface = parse_surface(j, ctx);

  const json& curves = need(j, "curves", ctx);
  if (!curves.is_object()) throw SchemaError(ctx + ": curves must be an object");
  for (const auto& [nm, coords] : curves.items())
    cat.curves.emplace(nm, parse_class(coords, cat.surface, ctx + ".curves." + nm));

  if (j.contains("geometric_intersections")) {
    for (const auto& e : j["geometric_intersections"]) {
      if (!e.is_array() || e.size() != 3)
        throw SchemaError(ctx + ": geometric entries must be [a, b, count]");
      const auto key = CurveCatalog::key(e[0].get<std::string>(), e[1].get<std::string>());
      cat.geometric_intersections[key] = e[2].get<int>();
    }
  }
  const json& rels = need(j, "relation_table", ctx);
  for (const auto& e : rels) {
    if (!e.is_array() || e.size() != 3)
      throw SchemaError(ctx + ": relation entries must be [a, b, kind]");
    const std::string kind = e[2].get<std::string>();
    const auto key = CurveCatalog::key(e[0].get<std::string>(), e[1].get<std::string>());
    if (kind == "commute") cat.relation_table[key] = Relation::Commute;
    else if (kind == "braid") cat.relation_table[key] = Relation::Braid;
    else throw SchemaError(ctx + ": unknown relation kind '" + kind + "'");
  }
  if (j.contains("named_conjugates")) {
    for (const auto& e : j["named_conjugates"]) {
      CurveCatalog::ConjugateAlias alias;
      alias.alias = need_str(e, "alias", ctx);
      alias.by = need_str(e, "by", ctx);
      alias.exponent = int(need_int(e, "exponent", ctx));
      alias.of = need_str(e, "of", ctx);
      cat.named_conjugates.push_back(std::move(alias));
    }
  }
  cat.validate();
  return cat;
}

CurveCatalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(parse_json_text(read_file(path), path.string()));
}

namespace {

CurveCatalog load_named_catalog(const std::string& stem) {
  const auto path = data_dir() / "catalogs" / (stem + ".json");
  if (!std::filesystem::exists(path))
    throw SchemaError("missing catalog data file: " + path.string());
  return load_catalog(path);
}

}  // namespace

CurveCatalog catalog_humphreys(int g, int b) {
  if (g < 2) throw GuardError("humphreys catalog needs genus >= 2");
  return load_named_catalog("humphreys_g" + std::to_string(g) + "_b" + std::to_string(b));
}

CurveCatalog catalog_hammenstadt_odd(int g) {
  if (g < 3) throw GuardError("odd-parity catalog needs genus >= 3");
  return load_named_catalog("hammenstadt_odd_g" + std::to_string(g));
}

CurveCatalog catalog_hammenstadt_even(int g) {
  if (g < 4) throw GuardError("even-parity catalog needs genus >= 4");
  return load_named_catalog("hammenstadt_even_g" + std::to_string(g));
}

ChainFile parse_chains(const json& j) {
  const std::string ctx = "chains";
  ChainFile f;
  f.catalog = need_str(j, "catalog", ctx);
  f.genus = int(need_int(j, "g", ctx));
  for (const auto& e : need(j, "identities", ctx)) {
    IdentityEntry entry;
    entry.name = need_str(e, "name", ctx);
    const std::string ectx = ctx + "[" + entry.name + "]";
    entry.lhs = parse_word(need(e, "lhs", ectx), ectx + ".lhs");
    entry.rhs = parse_word(need(e, "rhs", ectx), ectx + ".rhs");
    entry.lhs.catalog = f.catalog;
    entry.rhs.catalog = f.catalog;
    if (e.contains("steps")) {
      RewriteChain chain;
      chain.name = entry.name;
      for (const auto& sjson : e["steps"]) chain.steps.push_back(parse_word(sjson, ectx + ".steps"));
      for (const auto& mjson : need(e, "moves", ectx)) {
        RewriteMove mv;
        const std::string kind = need_str(mjson, "kind", ectx + ".moves");
        if (kind == "free_cancel") mv.kind = RewriteMove::Kind::FreeCancel;
        else if (kind == "commute") mv.kind = RewriteMove::Kind::Commute;
        else if (kind == "braid") mv.kind = RewriteMove::Kind::Braid;
        else if (kind == "conjugate_rewrite") mv.kind = RewriteMove::Kind::ConjugateRewrite;
        else throw SchemaError(ectx + ": unknown move kind '" + kind + "'");
        if (mjson.contains("pair")) {
          const auto& pr = mjson["pair"];
          if (!pr.is_array() || pr.size() != 2) throw SchemaError(ectx + ": move pair must be [a, b]");
          mv.a = pr[0].get<std::string>();
          mv.b = pr[1].get<std::string>();
        }
        chain.moves.push_back(std::move(mv));
      }
      if (chain.steps.size() != chain.moves.size() + 1)
        throw SchemaError(ectx + ": steps/moves length mismatch");
      entry.chain = std::move(chain);
    }
    f.identities.push_back(std::move(entry));
  }
  return f;
}

ChainFile load_chains(const std::filesystem::path& path) {
  return parse_chains(parse_json_text(read_file(path), path.string()));
}

IntMat parse_int_matrix(const json& j, const std::string& field) {
  const json& rows = j.contains(field) ? j[field] : j;
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw SchemaError("matrix '" + field + "' must be a nonempty array of integer rows");
  const size_t ncols = rows[0].size();
  IntMat m(Eigen::Index(rows.size()), Eigen::Index(ncols));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols)
      throw SchemaError("matrix '" + field + "' rows must all have equal length");
    for (size_t k = 0; k < ncols; ++k) {
      if (!rows[i][k].is_number_integer())
        throw SchemaError("matrix '" + field + "' entries must be integers");
      m(Eigen::Index(i), Eigen::Index(k)) = rows[i][k].get<Int>();
    }
  }
  return m;
}

}  // namespace spinform
