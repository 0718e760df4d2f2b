#include "ckforms/ranks.hpp"

namespace ckforms {

int complex_rank(const AlgebraSpec& s) {
  const int a = s.params[0], b = s.params.size() > 1 ? s.params[1] : 0;
  int r = 0;
  switch (s.family) {
    case Family::SL_R: r = a - 1; break;
    case Family::SL_C: r = 2 * (a - 1); break;
    case Family::SL_H: r = 2 * a - 1; break;
    case Family::SO: r = (a + b) / 2; break;
    case Family::SO_C: r = 2 * (a / 2); break;
    case Family::SU: r = a + b - 1; break;
    case Family::SP: r = a + b; break;
    case Family::SP_C: r = 2 * a; break;
    case Family::SOSTAR: r = a / 2; break;
  }
  return r * s.copies;
}

int compact_rank(const AlgebraSpec& s) {
  const int a = s.params[0], b = s.params.size() > 1 ? s.params[1] : 0;
  int r = 0;
  switch (s.family) {
    case Family::SL_R: r = a / 2; break;
    case Family::SL_C: r = a - 1; break;
    case Family::SL_H: r = a; break;
    case Family::SO: r = a / 2 + b / 2; break;
    case Family::SO_C: r = a / 2; break;
    case Family::SU: r = a + b - 1; break;
    case Family::SP: r = a + b; break;
    case Family::SP_C: r = a; break;
    case Family::SOSTAR: r = a / 2; break;
  }
  return r * s.copies;
}

}  // namespace ckforms
