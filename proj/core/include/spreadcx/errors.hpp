#pragma once

#include <stdexcept>
#include <string>

namespace spreadcx {

/// Input outside an operation's mathematical domain (degenerate mode, pole, negative hopping).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quadrature integrand produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t node, double k)
      : std::runtime_error(what), node_(node), k_(k) {}

  std::size_t node() const noexcept { return node_; }
  double k() const noexcept { return k_; }

 private:
  std::size_t node_;
  double k_;
};

}  // namespace spreadcx
