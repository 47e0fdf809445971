#ifndef FDDE_TOOLS_PRESETS_HPP
#define FDDE_TOOLS_PRESETS_HPP

namespace fdde_cli {

// JSON array of {"name", "command", "config"} runs for figures 1..5;
// nullptr for unknown ids. The configs are plain experiment configs, so a
// preset run equals a config file run.
const char* figure_preset_json(int figure);

}  // namespace fdde_cli

#endif
