#pragma once

#include <stdexcept>
#include <string>

namespace hdc {

// Invalid argument for a mathematical operation (pole, wrong range, ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Two quadratic irrationals from different fields Q(sqrt(d)) were combined.
class field_mismatch_error : public domain_error {
 public:
  explicit field_mismatch_error(const std::string& what) : domain_error(what) {}
};

// Input is valid but exceeds a documented combinatorial/sampling limit.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Collinear vertices where a proper triangle is required.
class degenerate_triangle_error : public domain_error {
 public:
  explicit degenerate_triangle_error(const std::string& what)
      : domain_error(what) {}
};

}  // namespace hdc
