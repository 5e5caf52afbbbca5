// Runs every "$ " command shown in the CLI guide and compares its stdout
// and exit status with the stored golden files, and the shown output with
// the golden stdout.
//
// usage: cli_golden <guide.md> <golden-dir> <lucascyc-binary> [--update]

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Example {
  std::string command;
  std::string shown;
  int line = 0;
};

std::vector<Example> read_examples(const fs::path& guide) {
  std::ifstream in(guide);
  std::vector<Example> out;
  std::string line;
  bool fenced = false;
  int line_no = 0;
  Example* current = nullptr;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.rfind("```", 0) == 0) {
      fenced = !fenced;
      current = nullptr;
      continue;
    }
    if (!fenced) continue;
    if (line.rfind("$ ", 0) == 0) {
      out.push_back(Example{line.substr(2), "", line_no});
      current = &out.back();
    } else if (current) {
      current->shown += line + "\n";
    }
  }
  return out;
}

std::pair<std::string, int> run(const std::string& command, const fs::path& binary, const fs::path& cwd) {
  std::string cmd = command;
  if (cmd.rfind("lucascyc ", 0) == 0) cmd = "'" + binary.string() + "'" + cmd.substr(8);
  cmd = "cd '" + cwd.string() + "' && " + cmd + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string text;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  const int status = ::pclose(pipe);
  return {text, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: cli_golden <guide.md> <golden-dir> <lucascyc-binary> [--update]\n";
    return 2;
  }
  const fs::path guide = argv[1], golden = argv[2], binary = fs::absolute(argv[3]);
  const bool update = argc > 4 && std::string(argv[4]) == "--update";
  const auto examples = read_examples(guide);
  if (examples.empty()) {
    std::cerr << "no examples found in " << guide << "\n";
    return 1;
  }
  const fs::path cwd = fs::temp_directory_path() / ("lucascyc_golden_" + std::to_string(::getpid()));
  fs::create_directories(cwd);

  int failures = 0;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    const Example& ex = examples[i];
    const auto [out, code] = run(ex.command, binary, cwd);
    const std::string recorded = out + "[exit " + std::to_string(code) + "]\n";
    char name[32];
    std::snprintf(name, sizeof name, "%02zu.txt", i + 1);
    const fs::path file = golden / name;
    if (update) {
      std::ofstream(file) << recorded;
      continue;
    }
    bool ok = true;
    if (!fs::exists(file) || slurp(file) != recorded) {
      std::cerr << guide.filename().string() << ":" << ex.line << ": '" << ex.command << "' differs from " << file
                << "\n--- got ---\n" << recorded;
      ok = false;
    }
    if (ex.shown != out) {
      std::cerr << guide.filename().string() << ":" << ex.line << ": output shown in the guide is stale for '"
                << ex.command << "'\n";
      ok = false;
    }
    std::cout << (ok ? "ok   " : "FAIL ") << ex.command << "\n";
    failures += !ok;
  }
  fs::remove_all(cwd);
  if (update) std::cout << "wrote " << examples.size() << " golden files\n";
  return failures ? 1 : 0;
}
