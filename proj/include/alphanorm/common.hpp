#pragma once

namespace alphanorm {

// Step budget used by every procedure that iterates the rewrite machine.
inline constexpr int kDefaultFuel = 10000;

// Three-valued answers: Unknown means a fuel budget ran out.
enum class Tri { False, True, Unknown };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::True:
      return "true";
    case Tri::False:
      return "false";
    default:
      return "unknown";
  }
}

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

}  // namespace alphanorm
