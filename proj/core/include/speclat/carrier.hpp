#ifndef SPECLAT_CARRIER_HPP
#define SPECLAT_CARRIER_HPP

#include <string>
#include <vector>

#include "speclat/error.hpp"

namespace speclat {

/// An indexed finite carrier set. Elements are the indices 0..size()-1;
/// names are presentation-only and never affect semantics, so operations
/// that require "the same carrier" compare sizes only.
class Carrier {
 public:
  /// Carrier of the given size with default names x0, x1, ...
  explicit Carrier(int size);

  /// Carrier with explicit names; names must be distinct, non-empty and
  /// match the size.
  Carrier(int size, std::vector<std::string> names);

  int size() const { return size_; }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  int size_;
  std::vector<std::string> names_;
};

}  // namespace speclat

#endif  // SPECLAT_CARRIER_HPP
