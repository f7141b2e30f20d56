#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "germlab/equising.hpp"
#include "germlab/invariants.hpp"

namespace germlab {

using Json = nlohmann::ordered_json;

/// Contents of a germ or family file.
struct GermFile {
  std::string name;
  unsigned source_dim = 0;
  /// Empty for a single germ; one symbol for a family.
  std::vector<std::string> params;
  std::vector<std::pair<std::string, std::vector<std::string>>> branches;

  bool is_family() const { return !params.empty(); }
};

/// Validates against the germ file schema. Throws SchemaViolation.
GermFile parse_germ_file(const Json& document);

/// Reads and validates a file. Throws IoError or SchemaViolation.
GermFile load_germ_file(const std::string& path);

/// Builds the germ, enforcing the corank-one normal form
/// (NormalFormViolation). Throws UsageError for family files.
GermSpec to_germ(const GermFile& file);
FamilySpec to_family(const GermFile& file);

Json to_json(const GermSpec& germ);
Json to_json(const StructureReport& report);
Json to_json(const InvariantReport& report);
Json to_json(const SliceChain& chain);
Json to_json(const FamilyVerdict& verdict);
Json error_json(std::string_view code, const std::string& message);

}  // namespace germlab
