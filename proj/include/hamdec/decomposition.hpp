#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hamdec/core.hpp"
#include "json.hpp"

namespace hamdec {

class Oracle {
 public:
  virtual ~Oracle() = default;
  // Writes one direction per color.
  virtual void directions_at(const Residue* x, Direction* out) const = 0;
  virtual Direction direction(const Residue* x, int color) const;
  virtual int dimension() const = 0;
};

// Provenance tree: every node names how its decomposition was obtained.
struct Recipe {
  std::string kind;
  Params params;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
  std::vector<Recipe> children;
};

struct Schedule;
struct LiftCertificate;

struct Decomposition {
  Params params;
  std::shared_ptr<const Oracle> oracle;
  Recipe recipe;
  // Certificates the structural verifier may consume.
  std::shared_ptr<const Schedule> schedule;
  std::shared_ptr<const LiftCertificate> lift;
  std::vector<Decomposition> children;

  Direction direction(std::span<const Residue> x, int color) const;
  void directions_at(std::span<const Residue> x, std::span<Direction> out) const;
};

// Wraps a direction table laid out as color * m^d + vertexIndex.
Decomposition explicit_decomposition(const Params& p, std::vector<Direction> table);

}  // namespace hamdec
