#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "spinform/plumbing.hpp"
#include "spinform/spin_mcg.hpp"

namespace spinform {

using json = nlohmann::json;

// Shipped data directory; SPINFORM_DATA_DIR overrides the build default.
std::filesystem::path data_dir();

std::string read_file(const std::filesystem::path& path);

// FNV-1a over the raw input bytes, rendered as fixed-width hex.
std::string fnv1a_digest(const std::string& bytes);

PlumbingDescriptor parse_descriptor(const json& j);
PlumbingDescriptor load_descriptor(const std::filesystem::path& path);

CurveCatalog parse_catalog(const json& j);
CurveCatalog load_catalog(const std::filesystem::path& path);

// Named catalogs resolved inside the data directory.
CurveCatalog catalog_humphreys(int g, int b);
CurveCatalog catalog_hammenstadt_odd(int g);
CurveCatalog catalog_hammenstadt_even(int g);

struct IdentityEntry {
  std::string name;
  TwistWord lhs;
  TwistWord rhs;
  // Optional move-certified derivation between rhs and lhs.
  std::optional<RewriteChain> chain;
};

struct ChainFile {
  std::string catalog;
  int genus = 0;
  std::vector<IdentityEntry> identities;
};

ChainFile parse_chains(const json& j);
ChainFile load_chains(const std::filesystem::path& path);

IntMat parse_int_matrix(const json& j, const std::string& field);

}  // namespace spinform
