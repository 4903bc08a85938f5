#include <doctest.h>

#include <filesystem>

#include "spinform/data_io.hpp"

using namespace spinform;
namespace fs = std::filesystem;

TEST_CASE("every shipped descriptor loads and validates") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(data_dir() / "descriptors")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    CHECK_NOTHROW(load_descriptor(entry.path()));
    ++seen;
  }
  CHECK(seen >= 12);
}

TEST_CASE("every shipped catalog passes the validity invariant") {
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(data_dir() / "catalogs")) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const CurveCatalog cat = load_catalog(entry.path());
    CHECK_NOTHROW(cat.validate());
    ++seen;
  }
  CHECK(seen >= 12);
}

TEST_CASE("named catalog loaders") {
  CHECK(catalog_humphreys(3, 2).curves.size() == 7);  // 2g+1 curves
  CHECK(catalog_humphreys(2, 0).curves.size() == 5);
  CHECK(catalog_hammenstadt_odd(5).curves.size() == 11);   // 2g+1
  CHECK(catalog_hammenstadt_even(5).curves.size() == 11);  // 2g+1
  CHECK(catalog_hammenstadt_odd(3).curves.size() == 7);
  CHECK_THROWS_AS(catalog_hammenstadt_odd(2), GuardError);
  CHECK_THROWS_AS(catalog_hammenstadt_even(3), GuardError);
  CHECK_THROWS_AS(catalog_humphreys(7, 0), SchemaError);  // no shipped file
}

TEST_CASE("every shipped chain file verifies") {
  for (int g = 3; g <= 5; ++g) {
    const ChainFile file =
        load_chains(data_dir() / "chains" / ("identities_g" + std::to_string(g) + ".json"));
    CHECK(file.genus == g);
    const CurveCatalog cat = chain_catalog(g);
    for (const auto& ident : file.identities) {
      CAPTURE(ident.name);
      CHECK(verify_identity_symplectic(ident.lhs, ident.rhs, cat, Ring::Z));
      CHECK(verify_identity_symplectic(ident.lhs, ident.rhs, cat, Ring::Z2));
      REQUIRE(ident.chain.has_value());
      CHECK(verify_rewrite_chain(*ident.chain, cat));
      const bool endpoints =
          (ident.chain->steps.front() == ident.rhs && ident.chain->steps.back() == ident.lhs) ||
          (ident.chain->steps.front() == ident.lhs && ident.chain->steps.back() == ident.rhs);
      CHECK(endpoints);
    }
  }
}

TEST_CASE("schema errors carry field context") {
  const json bad = json::parse(R"({"surface": {"g": 1}, "ambient": "homology_sphere"})");
  try {
    parse_descriptor(bad);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("surface") != std::string::npos);
  }

  json wrong_len = json::parse(R"({
    "surface": {"g": 1, "b": 1},
    "ambient": "homology_sphere",
    "nodes": [{"label": "m", "twist": 0}],
    "basis_assignment": {"m": [1, 0, 0]}
  })");
  CHECK_THROWS_AS(parse_descriptor(wrong_len), SchemaError);
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("spinform") == fnv1a_digest("spinform"));
  CHECK(fnv1a_digest("a") != fnv1a_digest("b"));
}

TEST_CASE("data directory honors the environment override") {
  const auto builtin = data_dir();
  setenv("SPINFORM_DATA_DIR", "/tmp/spinform_alt_data", 1);
  CHECK(data_dir() == fs::path("/tmp/spinform_alt_data"));
  unsetenv("SPINFORM_DATA_DIR");
  CHECK(data_dir() == builtin);
}
