#pragma once

#include <iosfwd>

namespace catoric {

/* Built-in reference example suite: pinned input/output pairs for every
   operation, checked exactly. Prints one line per check ("ok <name>" or
   "FAIL <name>: <detail>") and returns the number of failures. Deterministic
   and self-contained. */
int run_reference_examples(std::ostream& out);

}  // namespace catoric
