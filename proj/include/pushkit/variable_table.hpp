#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pushkit {

/// Ordered registry of ring generators with their complex degrees.
///
/// Registration order is the variable order of the graded-lex monomial order:
/// the first registered generator is the largest. Tables are immutable and
/// always handled through `TablePtr`, so polynomials can share them freely.
class VariableTable {
public:
  struct Entry {
    std::string name;
    unsigned degree;

    bool operator==(const Entry &) const = default;
  };

  /// Validates uniqueness of names and degrees >= 1; throws DomainError.
  static std::shared_ptr<const VariableTable> make(std::vector<Entry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Entry &operator[](std::size_t index) const { return entries_.at(index); }
  const std::vector<Entry> &entries() const noexcept { return entries_; }

  unsigned degree(std::size_t index) const { return entries_.at(index).degree; }
  const std::string &name(std::size_t index) const { return entries_.at(index).name; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find(), but throws UnboundVariableError for unknown names.
  std::size_t index(std::string_view name) const;

  bool operator==(const VariableTable &other) const { return entries_ == other.entries_; }

private:
  explicit VariableTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

/// True when both pointers refer to the same table or to structurally equal
/// tables.
bool same_table(const TablePtr &a, const TablePtr &b) noexcept;

/// The generator layout used for a projective bundle P(V) -> M with V of rank r:
///
///   u1..ur   (degree 1)  Chern roots, the generators of H*(BT)
///   x, y     (degree 1)  hyperplane class and its negative c1(S)
///   q1..q(r-1)(degree i) Chern classes of the tautological quotient bundle
///   c1..cr   (degree i)  Chern classes of V
///
/// Roots come first so that graded-lex leading terms of symmetric polynomials
/// are read off the roots before any inert generator.
class BundleVariables {
public:
  /// Shared, cached instance per rank. Throws DomainError for rank < 1.
  static const BundleVariables &of_rank(unsigned rank);

  unsigned rank() const noexcept { return rank_; }
  const TablePtr &table() const noexcept { return table_; }

  // 1-based accessors, matching the generator names.
  std::size_t u(unsigned i) const { return checked(i, rank_, u0_, "u"); }
  std::size_t q(unsigned i) const { return checked(i, rank_ - 1, q0_, "q"); }
  std::size_t c(unsigned i) const { return checked(i, rank_, c0_, "c"); }
  std::size_t x() const noexcept { return x_; }
  std::size_t y() const noexcept { return y_; }

  std::vector<std::size_t> roots() const;
  std::vector<std::size_t> chern() const;

  bool is_root(std::size_t var) const noexcept { return var >= u0_ && var < u0_ + rank_; }
  bool is_quotient(std::size_t var) const noexcept { return var >= q0_ && var < q0_ + rank_ - 1; }
  bool is_chern(std::size_t var) const noexcept { return var >= c0_ && var < c0_ + rank_; }

private:
  explicit BundleVariables(unsigned rank);

  static std::size_t checked(unsigned i, unsigned count, std::size_t base, const char *prefix);

  unsigned rank_;
  TablePtr table_;
  std::size_t u0_, x_, y_, q0_, c0_;
};

} // namespace pushkit
