#pragma once

#include "tlf/context.hpp"
#include "tlf/jsonio.hpp"

namespace tlf {

// Deterministic invariant battery across every module. The only input that
// influences the result is the context (in particular its seed), so two runs
// with the same configuration produce identical documents.
// Payload shape: {"checks": [{"name": .., "ok": ..}, ...],
//                 "passed": N, "failed": N, "ok": bool}
Json selftest_json(const Context& ctx);

}  // namespace tlf
