#include "hamdec/decomposition.hpp"

#include <vector>

namespace hamdec {

Direction Oracle::direction(const Residue* x, int color) const {
  std::vector<Direction> buf(static_cast<std::size_t>(dimension()));
  directions_at(x, buf.data());
  return buf[static_cast<std::size_t>(color)];
}

Direction Decomposition::direction(std::span<const Residue> x, int color) const {
  check_vertex(x, params);
  if (color < 0 || color >= params.d) fail(ErrorKind::InvalidInput, "color out of range");
  return oracle->direction(x.data(), color);
}

void Decomposition::directions_at(std::span<const Residue> x, std::span<Direction> out) const {
  check_vertex(x, params);
  if (out.size() != static_cast<std::size_t>(params.d)) fail(ErrorKind::InvalidInput, "output span has wrong size");
  oracle->directions_at(x.data(), out.data());
}

namespace {

class TableOracle final : public Oracle {
 public:
  TableOracle(Params p, std::vector<Direction> t) : p_(p), n_(vertex_count(p)), table_(std::move(t)) {}
  void directions_at(const Residue* x, Direction* out) const override {
    Index v = vertex_index({x, static_cast<std::size_t>(p_.d)}, p_.m);
    for (int c = 0; c < p_.d; ++c) out[c] = table_[static_cast<Index>(c) * n_ + v];
  }
  Direction direction(const Residue* x, int color) const override {
    return table_[static_cast<Index>(color) * n_ + vertex_index({x, static_cast<std::size_t>(p_.d)}, p_.m)];
  }
  int dimension() const override { return p_.d; }

 private:
  Params p_;
  Index n_;
  std::vector<Direction> table_;
};

}  // namespace

Decomposition explicit_decomposition(const Params& p, std::vector<Direction> table) {
  validate_params(p);
  const Index n = vertex_count(p);
  if (table.size() != sat_mul(n, static_cast<Index>(p.d)))
    fail(ErrorKind::MalformedInput, "explicit table has " + std::to_string(table.size()) + " entries, expected d*m^d");
  for (Direction v : table)
    if (v >= p.d) fail(ErrorKind::MalformedInput, "direction " + std::to_string(v) + " out of range");
  Decomposition dec;
  dec.params = p;
  dec.oracle = std::make_shared<TableOracle>(p, std::move(table));
  dec.recipe.kind = "explicit";
  dec.recipe.params = p;
  return dec;
}

}  // namespace hamdec
