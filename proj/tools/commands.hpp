#ifndef FFACTOR_TOOLS_COMMANDS_HPP_
#define FFACTOR_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ffactor::cli {

  struct JobSpec {
    std::string                command;
    std::vector<std::string>   inputs;
    std::optional<std::string> catalog;
    std::optional<std::size_t> max_order;
    std::uint64_t              budget_nodes = 1'000'000'000;
    std::size_t                workers      = 1;
    bool                       json         = false;
    std::optional<std::string> cache_dir;
    std::uint64_t              seed = 1;

    // command-specific
    std::optional<std::string> word;
    std::optional<std::size_t> rank;
    std::optional<std::size_t> degree;
    bool                       epimorphisms = false;
    bool                       normalize    = false;
  };

  enum ExitCode : int { exit_ok = 0, exit_refuted = 1, exit_error = 2 };

  // Parses argv (without the program name) and runs the command. FFACTOR_WORKERS
  // and FFACTOR_CACHE_DIR supply defaults for --workers and --cache.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  int run_job(JobSpec const& job, std::ostream& out, std::ostream& err);

}  // namespace ffactor::cli

#endif  // FFACTOR_TOOLS_COMMANDS_HPP_
