#pragma once

namespace catoric {

/* Full command-line front end. Exit status: 0 success, 1 domain error
   (machine-readable error JSON on stdout), 2 usage error. */
int run_cli(int argc, const char* const* argv);

}  // namespace catoric
