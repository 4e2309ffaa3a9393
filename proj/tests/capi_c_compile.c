/* Copyright (c) 2026 the hankelkit authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Compiled as C11: a build-time guarantee that hankel_c.h stays C-clean.
 * Returns standard:1 tail at 0 (= 4/3) computed through the shared library.
 */
#include "hankel/hankel_c.h"

double hk_c_compile_probe(void) {
  hk_weight* w = 0;
  double v = -1.0;
  if (hk_weight_parse("standard:1", &w) != HK_OK) return -1.0;
  if (hk_weight_tail(w, 0.0, &v) != HK_OK) v = -2.0;
  hk_weight_free(w);
  return v;
}
