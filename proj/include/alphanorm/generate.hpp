// Seeded random generators of well-formed syntax.
//
// Every generated object is well-formed by construction in the stated
// context; the few shapes that are only likely to be well-formed are
// filtered through the Checker before being returned.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "alphanorm/model.hpp"
#include "alphanorm/syntax.hpp"
#include "alphanorm/wellformed.hpp"

namespace alphanorm {

class Generator {
 public:
  Generator(Signature sig, std::uint64_t seed, int fuel = kDefaultFuel);

  // Context with exactly `depth` extensions, each type of size <= type_size.
  Ctx ctx(int depth, int type_size = 4);
  // Type of size <= budget (budget >= 1).
  Ty ty(const Ctx& c, int budget);
  // A term and its type; nullptr when the context admits no term.
  std::pair<Tm, Ty> tm(const Ctx& c, int budget);
  // A term whose type is convertible to U; nullptr if none was found.
  Tm tm_u(const Ctx& c, int budget);
  // A substitution out of `dom` and its codomain.
  std::pair<Sub, Ctx> sub(const Ctx& dom, int budget);

  // A checked instance of a primitive law; nullopt if none was found.
  std::optional<EquationInstance> equation(Rule r, int part_size = 4);

  int uniform(int lo, int hi);  // inclusive bounds
  std::mt19937_64& rng() { return rng_; }
  const Checker& checker() const { return chk_; }

 private:
  std::pair<Tm, Ty> tm_once(const Ctx& c, int budget);
  std::pair<Sub, Ctx> lift_of(const Ctx& dom, int budget);

  Signature sig_;
  Checker chk_;
  std::mt19937_64 rng_;
};

}  // namespace alphanorm
