#ifndef HN_CLI_HPP_
#define HN_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace hn {

// Command dispatch behind the hnrank binary. Exit status:
//   0 success, 1 domain error, 2 parse/usage error,
//   3 a verified instance violated the rank bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hn

#endif  // HN_CLI_HPP_
