#pragma once

namespace polymin::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage error.
int run(int argc, char** argv);

}  // namespace polymin::cli
