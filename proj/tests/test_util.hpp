#pragma once

#include <memory>
#include <string>

#include "mvkit/biconvex.hpp"

inline std::shared_ptr<const mvkit::RootContext> context(const std::string& type) {
  return std::make_shared<const mvkit::RootContext>(mvkit::datum_from_type(type));
}
