#include "pushkit/variable_table.hpp"

#include <map>
#include <mutex>
#include <set>

#include "pushkit/error.hpp"

namespace pushkit {

std::shared_ptr<const VariableTable> VariableTable::make(std::vector<Entry> entries) {
  std::set<std::string> seen;
  for (const auto &entry : entries) {
    if (entry.name.empty())
      throw DomainError("variable table: empty generator name");
    if (entry.degree < 1)
      throw DomainError("variable table: generator '" + entry.name + "' has degree 0");
    if (!seen.insert(entry.name).second)
      throw DomainError("variable table: duplicate generator '" + entry.name + "'");
  }
  return std::shared_ptr<const VariableTable>(new VariableTable(std::move(entries)));
}

std::optional<std::size_t> VariableTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name)
      return i;
  return std::nullopt;
}

std::size_t VariableTable::index(std::string_view name) const {
  if (auto i = find(name))
    return *i;
  throw UnboundVariableError("unknown generator '" + std::string(name) + "'");
}

bool same_table(const TablePtr &a, const TablePtr &b) noexcept {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

BundleVariables::BundleVariables(unsigned rank) : rank_(rank) {
  std::vector<VariableTable::Entry> entries;
  u0_ = entries.size();
  for (unsigned i = 1; i <= rank; ++i)
    entries.push_back({"u" + std::to_string(i), 1});
  x_ = entries.size();
  entries.push_back({"x", 1});
  y_ = entries.size();
  entries.push_back({"y", 1});
  q0_ = entries.size();
  for (unsigned i = 1; i < rank; ++i)
    entries.push_back({"q" + std::to_string(i), i});
  c0_ = entries.size();
  for (unsigned i = 1; i <= rank; ++i)
    entries.push_back({"c" + std::to_string(i), i});
  table_ = VariableTable::make(std::move(entries));
}

const BundleVariables &BundleVariables::of_rank(unsigned rank) {
  if (rank < 1)
    throw DomainError("rank must be at least 1");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<BundleVariables>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[rank];
  if (!slot)
    slot.reset(new BundleVariables(rank));
  return *slot;
}

std::size_t BundleVariables::checked(unsigned i, unsigned count, std::size_t base, const char *prefix) {
  if (i < 1 || i > count)
    throw ArityError(std::string("generator ") + prefix + std::to_string(i) + " out of range 1.." +
                     std::to_string(count));
  return base + i - 1;
}

std::vector<std::size_t> BundleVariables::roots() const {
  std::vector<std::size_t> out;
  for (unsigned i = 0; i < rank_; ++i)
    out.push_back(u0_ + i);
  return out;
}

std::vector<std::size_t> BundleVariables::chern() const {
  std::vector<std::size_t> out;
  for (unsigned i = 0; i < rank_; ++i)
    out.push_back(c0_ + i);
  return out;
}

} // namespace pushkit
