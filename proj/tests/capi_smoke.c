// Copyright 2026 The cgt-domineering Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <stdio.h>
#include <string.h>

#include "cgt/cgt.h"

int main(void) {
  cgt_context* ctx = NULL;
  cgt_evaluation* e = NULL;
  if (cgt_context_create(&ctx) != CGT_OK) return 1;
  if (cgt_evaluate(ctx, "..|..", CGT_THERMOGRAPH_SCAFFOLD, &e) != CGT_OK) {
    fprintf(stderr, "%s\n", cgt_last_error());
    cgt_context_destroy(ctx);
    return 1;
  }
  int ok = strcmp(cgt_evaluation_value(e), "\xC2\xB1" "1") == 0 && strcmp(cgt_evaluation_temperature(e), "1") == 0;
  cgt_evaluation_destroy(e);
  cgt_context_destroy(ctx);
  printf("%s\n", ok ? "ok" : "mismatch");
  return ok ? 0 : 1;
}
