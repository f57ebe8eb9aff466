#pragma once

#include "tfano/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfano {

// TFANO_CATALOG_DIR when set, else the bundled data/catalog
std::string catalog_dir();

struct CatalogEntry {
  std::string name;
  std::string dir;
  Json meta;  // entry.json
  std::optional<std::string> fdivisor_path() const;
  std::optional<std::string> divpolytope_path() const;
  std::optional<std::string> reference_path(const std::string& key) const;
};

std::vector<std::string> catalog_names();
CatalogEntry catalog_entry(const std::string& name);  // throws Parse when unknown
bool is_catalog_ref(const std::string& ref);
// "catalog:3.10" with kind "fdivisor" or "divpolytope" → file path; plain paths pass through
std::string resolve(const std::string& ref, const std::string& kind);

// Relations such as "T_1T_2^2T_3 + T_4T_5 + T_6^2": per monomial the sorted exponent list.
std::vector<std::vector<std::vector<long>>> relation_shapes(const std::vector<std::string>& relations);

struct ReportLine {
  std::string field;
  std::string status;  // PASS, FAIL, UNDECIDED, ERROR, INFO
  Json computed, expected;
  std::string note;
};
struct Report {
  std::string entry;
  std::vector<ReportLine> lines;
  bool failed() const;
  Json to_json() const;
};
// Every value is computed from the data; expectations are only compared against.
Report report(const CatalogEntry& e, const std::optional<std::string>& fdivisor_override = std::nullopt,
              const std::optional<std::string>& divpolytope_override = std::nullopt);

}  // namespace tfano
