#pragma once

namespace almalt {

// Selects the reference loop or the OpenMP kernel. Both produce identical
// results; the serial path is the one tests compare against.
enum class Exec { serial, parallel };

}  // namespace almalt
