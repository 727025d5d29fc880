// End-to-end checks of the ordcalc command-line contract: output lines,
// exit codes, format options and the repl loop.  argv[1] is the binary.

#include <cstdio>
#include <iostream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(const std::string& what, bool ok) {
  if (!ok) ++failures;
  std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
}

void expect_line(const std::string& args, const std::string& line, int code) {
  RunResult r = run(args);
  expect(args + " -> '" + line + "' (exit " + std::to_string(code) + ")",
         r.exit_code == code && r.out == line + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_contract <path-to-ordcalc>\n");
    return 2;
  }
  cli = argv[1];

  expect_line("eval \"(w+2) #* (w+2)\"", "w^2 + w*4 + 4", 0);
  expect_line("eval \"(1 #+ 1) j* w\"", "w", 0);
  expect_line("eval \"w j* 2\"", "w*2", 0);
  expect_line("eval --format latex \"w*2\"", "\\omega \\cdot 2", 0);
  expect_line("eval --format json \"w + 1\"",
              "{\"terms\":[{\"exp\":{\"terms\":[{\"exp\":{\"terms\":[]},"
              "\"coeff\":\"1\"}]},\"coeff\":\"1\"},{\"exp\":{\"terms\":[]},"
              "\"coeff\":\"1\"}]}",
              0);

  {
    RunResult r = run("eval \"w^\"");
    expect("eval w^ fails with exit 2 and no stdout",
           r.exit_code == 2 && r.out.empty());
  }
  {
    RunResult r = run("eval \"wdiv(w+1)\"");
    expect("eval wdiv(w+1) fails with exit 2", r.exit_code == 2 && r.out.empty());
  }

  expect_line("compare \"1 + w\" \"1 #+ w\"", "<", 0);
  expect_line("compare \"w j* 2\" \"w #* 2\"", "=", 0);
  expect_line("compare \"2 ^ w\" \"2 #^ w\"", "=", 0);
  expect_line("compare \"w + 1\" \"w\"", ">", 0);

  {
    RunResult r = run("laws --law jacthm --seed 7 --trials 300");
    expect("laws --law jacthm passes with exit 0",
           r.exit_code == 0 && r.out.find("PASS") == 0);
  }
  {
    RunResult r = run("laws --law naive-sj-add");
    expect("laws --law naive-sj-add exhibits its counterexample",
           r.exit_code == 0 && r.out.find("counterexample") != std::string::npos &&
               r.out.find("a=2") != std::string::npos);
  }
  {
    RunResult r = run("laws --law no-such");
    expect("laws --law no-such exits 2", r.exit_code == 2);
  }
  {
    RunResult r = run("laws --trials 40 --threads 2");
    expect("laws (all, 40 trials) exits 0", r.exit_code == 0);
  }
  {
    RunResult r = run("table");
    expect("table prints the three squares and exits 0",
           r.exit_code == 0 &&
               r.out.find("w^2 + w*2 + 2") != std::string::npos &&
               r.out.find("w^2 + w*2 + 4") != std::string::npos &&
               r.out.find("w^2 + w*4 + 4") != std::string::npos &&
               r.out.find("n/a") != std::string::npos);
  }
  {
    std::string script = "printf 'w j* 2\\n(\\n:latex\\nw*2\\n:q\\n' | \"" +
                         cli + "\" repl 2>/dev/null";
    FILE* pipe = popen(script.c_str(), "r");
    std::string out;
    if (pipe != nullptr) {
      char buf[4096];
      size_t n;
      while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
      int status = pclose(pipe);
      expect("repl evaluates, survives errors, honors :latex and :q",
             WIFEXITED(status) && WEXITSTATUS(status) == 0 &&
                 out == "w*2\n\\omega \\cdot 2\n");
    } else {
      expect("repl pipe", false);
    }
  }
  {
    RunResult r = run("");
    expect("missing subcommand exits 2", r.exit_code == 2);
  }

  if (failures == 0) {
    std::printf("cli contract: all checks passed\n");
    return 0;
  }
  std::printf("cli contract: %d checks FAILED\n", failures);
  return 1;
}
