#ifndef SOLVCOH_SYMBOLIC_HPP
#define SOLVCOH_SYMBOLIC_HPP

#include "solvcoh/matrix.hpp"
#include "solvcoh/mpoly.hpp"

#include <string>
#include <vector>

namespace solvcoh {

using SymbolicMatrix = Matrix<SymbolicRationalFunction>;

/// Coefficients a_0 .. a_{n-1} of det(xI - m) = x^n + sum a_i x^i, computed division free.
inline std::vector<SymbolicRationalFunction> symbolic_char_coeffs(const SymbolicMatrix& m) {
  auto cp = char_poly(m);
  std::vector<SymbolicRationalFunction> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(cp.coeff(static_cast<int>(i)));
  return out;
}

/// Checks f == target after substituting the given variables in target.
inline bool symbolic_identity(const SymbolicRationalFunction& f, SymbolicRationalFunction target,
                              const std::vector<std::pair<std::size_t, SymbolicRationalFunction>>& subs) {
  for (const auto& [i, q] : subs) target = target.substitute(i, q);
  return f == target;
}

/// Named symbol table so callers can refer to variables by name.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {}
  std::size_t index(const std::string& n) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    names_.push_back(n);
    return names_.size() - 1;
  }
  SymbolicRationalFunction operator[](const std::string& n) { return SymbolicRationalFunction::var(index(n)); }
  const std::vector<std::string>& names() const { return names_; }
  std::string show(const SymbolicRationalFunction& f) const { return f.to_string(names_); }

 private:
  std::vector<std::string> names_;
};

}  // namespace solvcoh

#endif
