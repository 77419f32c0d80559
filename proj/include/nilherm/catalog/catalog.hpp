#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilherm/io/document.hpp"

namespace nilherm {

struct CatalogEntry {
  AlgebraDocument doc;
  std::string summary;
  std::string provenance;
  std::optional<ClassificationFlags> declared;  // expected classification of (algebra, J)
  bool has_parameter = false;
};

struct CatalogInfo {
  std::string name;
  std::string summary;
  bool has_parameter;
};

std::vector<CatalogInfo> catalog_list();

/// Entries with a parameter t use `t` when given and a documented default otherwise.
/// Throws Error for unknown names, for a t on entries without one, and for complex t where
/// only rational values make sense.
CatalogEntry catalog_get(const std::string& name, const std::optional<Gaussian>& t = std::nullopt);

}  // namespace nilherm
