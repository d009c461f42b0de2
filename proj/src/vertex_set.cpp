#include "domrec/vertex_set.hpp"

#include <algorithm>

#include "domrec/errors.hpp"

namespace domrec {

namespace {

VertexSet::Word checked_bit(int v) {
  if (v < 0 || v >= kMaxVertices)
    throw DomainError("vertex id " + std::to_string(v) + " outside [0, " +
                      std::to_string(kMaxVertices) + ")");
  return VertexSet::Word{1} << v;
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> ids) {
  for (int v : ids) bits_ |= checked_bit(v);
}

VertexSet VertexSet::from_ids(const std::vector<int>& ids) {
  Word bits = 0;
  for (int v : ids) bits |= checked_bit(v);
  return VertexSet(bits);
}

std::vector<int> VertexSet::ids() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

}  // namespace domrec
