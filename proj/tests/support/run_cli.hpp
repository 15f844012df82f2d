#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef JPTRI_CLI_PATH
#error "JPTRI_CLI_PATH must point at the built binary"
#endif

namespace jptri::testsupport {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CliResult run_cli(const std::string& args) {
  const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/jptri_cli_out.txt";
  const std::string cmd =
      std::string(JPTRI_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = (raw == -1) ? -1 : WEXITSTATUS(raw);
  result.out = slurp(out_path);
  std::remove(out_path.c_str());
  return result;
}

}  // namespace jptri::testsupport
