#include <algorithm>
#include <stdexcept>

#include "subfield/code.hpp"
#include "subfield/errors.hpp"

namespace subfield {

GeneratorMatrix::GeneratorMatrix(FiniteField field, std::size_t rows, std::size_t cols)
    : GeneratorMatrix(std::move(field), rows, cols, std::vector<Code>(rows * cols, 0)) {}

GeneratorMatrix::GeneratorMatrix(FiniteField field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("generator matrix needs at least one row and column");
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match shape");
  for (auto e : entries_)
    if (e >= field_.order()) throw std::invalid_argument("matrix entry outside the field");
}

GeneratorMatrix GeneratorMatrix::from_elements(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("empty matrix");
  const FiniteField field = rows.front().front().field();
  const std::size_t cols = rows.front().size();
  std::vector<Code> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (const auto& e : r) {
      if (!e.field().same_as(field)) throw std::invalid_argument("matrix entries from different fields");
      entries.push_back(e.code());
    }
  }
  return GeneratorMatrix(field, rows.size(), cols, std::move(entries));
}

void GeneratorMatrix::set(std::size_t r, std::size_t c, Code v) {
  if (v >= field_.order()) throw std::invalid_argument("matrix entry outside the field");
  entries_[r * cols_ + c] = v;
}

std::vector<std::vector<FiniteField::Code>> reduced_basis(const GeneratorMatrix& g) {
  const auto& f = g.field();
  std::vector<std::vector<FiniteField::Code>> m(g.rows());
  for (std::size_t r = 0; r < g.rows(); ++r) m[r].assign(g.row(r).begin(), g.row(r).end());

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < g.cols() && pivot_row < m.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[pivot_row]);
    auto& pr = m[pivot_row];
    const auto inv = f.inv(pr[c]);
    for (auto& e : pr) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == pivot_row || m[r][c] == 0) continue;
      const auto factor = m[r][c];
      for (std::size_t j = c; j < g.cols(); ++j)
        if (pr[j] != 0) m[r][j] = f.sub(m[r][j], f.mul(factor, pr[j]));
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

std::size_t rank(const GeneratorMatrix& g) { return reduced_basis(g).size(); }

Basis polynomial_basis(const FiniteField& field) {
  Basis b;
  FiniteField::Code code = 1;
  for (std::uint32_t i = 0; i < field.degree(); ++i, code *= field.characteristic())
    b.elements.push_back(field.element(code));
  return b;
}

namespace {

// Coordinates over GF(p) of each basis element, as the columns of an m x m
// matrix over the prime field.
GeneratorMatrix basis_matrix(const FiniteField& field, std::span<const FieldElement> elements) {
  const std::uint32_t m = field.degree();
  const FiniteField prime = make_field(field.characteristic(), 1);
  GeneratorMatrix mat(prime, m, m);
  for (std::uint32_t j = 0; j < m; ++j)
    for (std::uint32_t i = 0; i < m; ++i) mat.set(i, j, field.coeff(elements[j].code(), i));
  return mat;
}

}  // namespace

bool is_basis(const FiniteField& field, std::span<const FieldElement> elements) {
  if (elements.size() != field.degree()) return false;
  for (const auto& e : elements)
    if (!e.field().same_as(field)) return false;
  return rank(basis_matrix(field, elements)) == field.degree();
}

GeneratorMatrix subfield_expand(const GeneratorMatrix& g, const Basis& basis) {
  const auto& f = g.field();
  if (!is_basis(f, basis.elements)) throw std::invalid_argument("basis is not independent over the prime field");
  const std::uint32_t m = f.degree();
  const std::uint32_t p = f.characteristic();
  const FiniteField prime = make_field(p, 1);

  // Invert the basis matrix B (columns = basis coordinates) by reducing [B | I].
  const GeneratorMatrix bm = basis_matrix(f, basis.elements);
  GeneratorMatrix aug(prime, m, 2 * m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) aug.set(i, j, bm.at(i, j));
    aug.set(i, m + i, 1);
  }
  const auto red = reduced_basis(aug);
  // red is [I | B^{-1}]
  auto to_basis = [&](FiniteField::Code x, std::uint32_t j) {
    std::uint64_t s = 0;
    for (std::uint32_t i = 0; i < m; ++i) s += static_cast<std::uint64_t>(red[j][m + i]) * f.coeff(x, i);
    return static_cast<FiniteField::Code>(s % p);
  };

  GeneratorMatrix out(prime, g.rows() * m, g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      for (std::uint32_t j = 0; j < m; ++j) out.set(r * m + j, c, to_basis(g.at(r, c), j));
  return out;
}

GeneratorMatrix subfield_expand(const GeneratorMatrix& g) { return subfield_expand(g, polynomial_basis(g.field())); }

std::uint64_t trace_code_enumerate(const GeneratorMatrix& g,
                                   const std::function<void(std::span<const std::uint32_t>)>& visit,
                                   std::uint64_t budget) {
  const auto& f = g.field();
  const std::uint64_t q = f.order();
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (tuples > budget / q) throw BudgetExceeded("q^k parameter tuples exceed the enumeration budget");
    tuples *= q;
  }
  if (tuples > budget) throw BudgetExceeded("q^k parameter tuples exceed the enumeration budget");

  std::vector<FiniteField::Code> a(g.rows(), 0);
  std::vector<FiniteField::Code> combo(g.cols(), 0);
  std::vector<std::uint32_t> word(g.cols(), 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t rest = t;
    for (auto& ai : a) {
      ai = static_cast<FiniteField::Code>(rest % q);
      rest /= q;
    }
    std::fill(combo.begin(), combo.end(), 0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
      if (a[i] == 0) continue;
      const auto row = g.row(i);
      for (std::size_t c = 0; c < g.cols(); ++c) combo[c] = f.add(combo[c], f.mul(a[i], row[c]));
    }
    for (std::size_t c = 0; c < g.cols(); ++c) word[c] = f.trace(combo[c]);
    visit(word);
  }
  return tuples;
}

}  // namespace subfield
