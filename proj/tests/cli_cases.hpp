#pragma once

// Golden CLI cases: fixtures/golden/cases.txt lists "name | args | exit".

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli_cases {

struct Case {
  std::string name, args;
  int exit_code = 0;
};

struct Outcome {
  std::string out;
  int exit_code = -1;
};

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Case> load(const std::string& fixtures) {
  std::vector<Case> out;
  std::istringstream in(slurp(fixtures + "/golden/cases.txt"));
  for (std::string line; std::getline(in, line);) {
    if (strip(line).empty() || strip(line)[0] == '#') continue;
    auto a = line.find('|'), b = line.rfind('|');
    if (a == b) throw std::runtime_error("malformed case line: " + line);
    std::string args = strip(line.substr(a + 1, b - a - 1));
    for (std::size_t p; (p = args.find("@FIX")) != std::string::npos;) args.replace(p, 4, "@" + fixtures);
    out.push_back({strip(line.substr(0, a)), args, std::stoi(strip(line.substr(b + 1)))});
  }
  return out;
}

// Runs the binary through the shell; stdout and stderr are captured together.
inline Outcome run(const std::string& binary, const std::string& args) {
  std::string cmd = "'" + binary + "' " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  Outcome o;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) o.out.append(buf.data(), n);
  int status = pclose(p);
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

inline std::string golden_path(const std::string& fixtures, const Case& c) { return fixtures + "/golden/" + c.name + ".out"; }

}  // namespace cli_cases
