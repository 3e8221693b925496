#pragma once

namespace volterra::app {

/// Entry point of the `volterra` tool. Returns 0 when every reported check
/// passes, 1 on a failed tolerance or numerical breakdown, 2 on bad input.
int cli_main(int argc, char** argv);

}  // namespace volterra::app
