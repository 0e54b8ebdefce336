#pragma once

// Minimal helper for end-to-end tests that drive the CLI binary.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Runs `<cli> <args>`, capturing exit code, stdout and stderr.
inline CliResult run_cli(const std::string& cli_path, const std::string& args) {
  static int counter = 0;
  ++counter;
  std::string out_path = "cli_stdout_" + std::to_string(counter) + ".tmp";
  std::string err_path = "cli_stderr_" + std::to_string(counter) + ".tmp";
  std::string cmd =
      "\"" + cli_path + "\" " + args + " > " + out_path + " 2> " + err_path;
  int status = std::system(cmd.c_str());
  CliResult r;
  r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace testutil
