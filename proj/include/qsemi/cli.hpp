#ifndef QSEMI_CLI_HPP_
#define QSEMI_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace qsemi {

  //! Exit codes of the command line tool.
  enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_error = 2 };

  //! Runs the qsemi command line with \p args (program name excluded).
  //! Results go to \p out, progress and errors to \p err.
  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qsemi

#endif  // QSEMI_CLI_HPP_
