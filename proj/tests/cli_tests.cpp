// End-to-end tests of the laycheck binary: exit codes and stdout shapes.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LAYCHECK_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_lay(const std::string& name, const std::string& text) {
  std::string path = "cli_test_" + name + ".lay";
  std::ofstream(path) << text << "\n";
  return path;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_exit(const std::string& args, int code) {
  RunResult r = run(args);
  expect(r.exit_code == code, args + " -> exit " + std::to_string(r.exit_code) +
                                  ", want " + std::to_string(code));
}

void expect_out(const std::string& args, const std::string& needle) {
  RunResult r = run(args);
  expect(r.out.find(needle) != std::string::npos,
         args + " stdout missing: " + needle);
}

}  // namespace

int main() {
  std::string png = write_lay("png", "p(2,1) f v f");
  std::string fv = write_lay("fv", "f v");
  std::string caveat = write_lay("caveat", "p(1,1) [ v ]");
  std::string bad = write_lay("bad", "f f p(1,3)");
  std::string junk = write_lay("junk", "f q v");
  std::string shrinkable = write_lay("shrinkable", "p(0,5) v f v f");

  // exit codes: 0 deserializable, 1 not, 2 invalid, 3 parse error
  expect_exit("check " + png, 0);
  expect_exit("check " + fv, 1);
  expect_exit("check " + caveat, 1);
  expect_exit("check --unsound " + caveat, 0);
  expect_exit("check --flat " + png, 0);
  expect_exit("check --flat " + caveat, 2);
  expect_exit("check " + bad, 2);
  expect_exit("check " + junk, 3);
  expect_exit("check missing-file.lay", 2);
  expect_exit("check --oracle " + png, 0);

  expect_out("check " + png, "deserializable");
  expect_out("check " + fv, "non-deserializable");
  expect_out("check " + fv, "missing len at 1");
  expect_out("check --json " + png, "\"status\"");
  expect_out("check --json " + png, "\"factsDerived\"");

  expect_out("trace " + png, "Forward@0");
  expect_out("trace " + png, "Join@2");
  expect_out("trace --art " + png, "====");

  expect_out("graph --format dot " + png, "digraph");
  expect_out("graph --format json " + png, "\"derivedBy\"");
  RunResult bad_format = run("graph --format svg " + png);
  expect(bad_format.exit_code > 1, "graph --format svg should fail");

  expect_out("preprocess " + shrinkable, "p(1,3) v f v f");
  expect_out("preprocess --shrink " + shrinkable, "p(1,3) v f v f");
  expect_out("preprocess --forward-only " + png, "forward-only: true");

  expect_out("unwind -n 1 " + caveat, "p(1,0)\np(1,1) v\n");
  expect_out("fmt " + png, "p(2,1) f v f");
  expect_exit("fmt " + junk, 3);

  if (failures == 0) {
    std::cout << "cli_tests: all passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " failure(s)\n";
  return 1;
}
