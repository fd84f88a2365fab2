#pragma once

namespace conseq {

/// Selects the serial reference path or the OpenMP kernel.
enum class Execution { Serial, Parallel };

}  // namespace conseq
