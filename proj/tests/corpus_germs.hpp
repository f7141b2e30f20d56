#pragma once

#include "germlab/germ.hpp"

namespace corpus {

inline germlab::GermSpec crosscap() { return germlab::GermSpec::parse("crosscap", 2, {{"p0", {"x1", "y^2", "x1*y"}}}); }
inline germlab::GermSpec immersion() { return germlab::GermSpec::parse("immersion", 2, {{"p0", {"x1", "y", "0"}}}); }
inline germlab::GermSpec s1() { return germlab::GermSpec::parse("S1", 2, {{"p0", {"x1", "y^2", "y^3-x1^2*y"}}}); }
inline germlab::GermSpec s2() { return germlab::GermSpec::parse("S2", 2, {{"p0", {"x1", "y^2", "y^3-x1^3*y"}}}); }
inline germlab::GermSpec h2() { return germlab::GermSpec::parse("H2", 2, {{"p0", {"x1", "y^3", "x1*y+y^5"}}}); }
inline germlab::GermSpec cusp_curve() { return germlab::GermSpec::parse("cusp", 1, {{"p0", {"y^2", "y^3"}}}); }
inline germlab::GermSpec s1_3d() {
  return germlab::GermSpec::parse("S1x", 3, {{"p0", {"x1", "x2", "y^2", "y^3+(x1^2+x2^2)*y"}}});
}
inline germlab::GermSpec two_planes() {
  return germlab::GermSpec::parse("two-planes", 2, {{"p0", {"x1", "y", "0"}}, {"p1", {"x1", "0", "y"}}});
}
inline germlab::GermSpec three_lines() {
  return germlab::GermSpec::parse("three-lines", 1,
                                  {{"p0", {"y", "0"}}, {"p1", {"0", "y"}}, {"p2", {"y", "y"}}});
}

}  // namespace corpus
