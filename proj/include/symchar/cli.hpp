#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symchar::cli {

enum ExitCode : int { kAllPassed = 0, kCheckFailed = 1, kUsageError = 2 };

// Runs one command. args excludes the program name.
//
//   table N | perm-table N | split N --alpha P | verify N [--alpha P | --all-alphas]
//   cartan N --alpha P | genfun --set S --prime P [--order N] [--check] | regsing N L
//   kschur verify FILE | kschur fixture N K -o FILE
//
// Every command accepts --format {human|machine|csv}. The table cache lives in
// $SYMCHAR_CACHE_DIR (see default_cache_dir()).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symchar::cli
