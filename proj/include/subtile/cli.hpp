#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subtile {

// Exit-code contract: 0 = positive decision / success, 1 = negative
// decision, 2 = error, 3 = search budget exceeded. JSON results go to `out`,
// human-readable summaries to `err`.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace subtile
