#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#ifndef CIRCFOL_CLI_PATH
#error "CIRCFOL_CLI_PATH must point at the command-line tool"
#endif

namespace circfol::testing {

struct CommandResult {
  int status = -1;
  std::string out;
  std::string err;
};

/// Runs the CLI with `args`; stdout is captured through the pipe and stderr
/// through a temporary file.
inline CommandResult run(const std::string& args) {
  char tmpl[] = "/tmp/circfol_stderr_XXXXXX";
  const int fd = mkstemp(tmpl);
  if (fd < 0) throw std::runtime_error("mkstemp failed");
  close(fd);
  const std::string cmd = std::string(CIRCFOL_CLI_PATH) + " " + args + " 2>" + tmpl;

  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;

  std::ifstream in(tmpl);
  r.err.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::remove(tmpl);
  return r;
}

}  // namespace circfol::testing
