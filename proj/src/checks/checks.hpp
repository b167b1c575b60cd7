#pragma once

#include "exrings/matrix.hpp"
#include "exrings/verdict.hpp"

namespace exrings::checks {

#define EXRINGS_CHECK(name) Verdict check_##name(const RingContext& ctx, const RunConfig& cfg)

EXRINGS_CHECK(lem2);
EXRINGS_CHECK(lem5);
EXRINGS_CHECK(lem6);
EXRINGS_CHECK(lem8);
EXRINGS_CHECK(lem10);
EXRINGS_CHECK(lem11);
EXRINGS_CHECK(lem14);
EXRINGS_CHECK(lem17);
EXRINGS_CHECK(lem18);
EXRINGS_CHECK(lem19);
EXRINGS_CHECK(lem20);
EXRINGS_CHECK(lem21);
EXRINGS_CHECK(lem22);
EXRINGS_CHECK(lem23);
EXRINGS_CHECK(thm16);
EXRINGS_CHECK(thm19);
EXRINGS_CHECK(thm23);
EXRINGS_CHECK(thm24);
EXRINGS_CHECK(thm25);
EXRINGS_CHECK(thm28);
EXRINGS_CHECK(thm29);
EXRINGS_CHECK(thm31);
EXRINGS_CHECK(thm32);
EXRINGS_CHECK(thm34);
EXRINGS_CHECK(thm35);
EXRINGS_CHECK(thm36);
EXRINGS_CHECK(thm37);
EXRINGS_CHECK(ex2);
EXRINGS_CHECK(ex3);
EXRINGS_CHECK(ex4);
EXRINGS_CHECK(remark1);

#undef EXRINGS_CHECK

}  // namespace exrings::checks
