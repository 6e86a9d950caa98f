// Spawns the built binary and checks stdout plus the exit-code contract:
// 0 ok, 1 invalid query, 2 backend mismatch, 3 identity failure,
// 4 unsupported oracle request.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CPMOM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& what) {
  expect(r.out.find(needle) != std::string::npos, what + " (missing '" + needle + "' in: " + r.out + ")");
}

}  // namespace

int main() {
  auto r = run("coeff --ensemble sp --k1 1 --k2 1 --n1 0 --n2 2 --backend both");
  expect(r.exit_code == 0, "coeff both exits 0");
  expect_contains(r, "1/80", "coeff value");
  expect_contains(r, "(2N)^5", "coeff exponent");

  r = run("coeff --ensemble so --k1 0 --k2 1 --n1 0 --n2 9");
  expect(r.exit_code == 0, "so first moment exits 0");
  expect_contains(r, "1 ", "so first moment is 1");
  expect_contains(r, "(2N)^9", "so first moment exponent");

  r = run("coeff --ensemble ominus --k1 0 --k2 1 --n1 0 --n2 1");
  expect(r.exit_code == 1, "ominus n1=0 exits 1");

  r = run("coeff --ensemble sp --k1 0 --k2 0 --n1 0 --n2 0");
  expect(r.exit_code == 1, "k1=k2=0 exits 1");

  r = run("coeff --ensemble sp --k1 0 --k2 2 --n1 0 --n2 3 --factored");
  expect(r.exit_code == 0, "factored coeff exits 0");
  expect_contains(r, "23/(2^7*3*5*7)", "factored rendering");

  r = run("coeff --ensemble sp --k1 0 --k2 1 --n1 0 --n2 2 --format json --decimal");
  expect(r.exit_code == 0, "json coeff exits 0");
  expect_contains(r, "\"value\":\"1/6\"", "json exact value");
  expect_contains(r, "\"decimal\"", "json decimal tag");

  r = run("table --ensemble so --k1-range 1 --k2-range 1 --n1-range 0:2 --n2-range 2");
  expect(r.exit_code == 0, "table exits 0");
  expect_contains(r, "2/3", "table row n1=0");
  expect_contains(r, "7/30", "table row n1=2");
  expect_contains(r, "ok", "table match column");

  r = run("table --ensemble sp --k1-range 1:0 --k2-range 1 --n1-range 0 --n2-range 0");
  expect(r.exit_code == 0, "empty range exits 0");
  expect(r.out == "ensemble,k1,k2,n1,n2,exponent,value_comb,value_det,match\n",
         "empty range emits the header only");

  r = run("verify --suite closed --max-n 20");
  expect(r.exit_code == 0, "closed suite exits 0");
  expect_contains(r, "\"failures\": 0", "closed suite reports no failures");

  r = run("verify --suite gamma --max-k 3");
  expect(r.exit_code == 0, "gamma suite exits 0");

  r = run("verify --suite cross --max-k 2 --max-n 2");
  expect(r.exit_code == 0, "cross suite exits 0");

  r = run("verify --suite lemmas --max-n 4 --max-k 2 --trials 5 --seed 3");
  expect(r.exit_code == 0, "lemmas suite exits 0");

  r = run("mc --ensemble sp --N 1 --k1 0 --k2 1 --n1 0 --n2 0 --samples 5000 --seed 7 --oracle");
  expect(r.exit_code == 0, "mc with oracle exits 0");
  expect_contains(r, "\"quadrature\":2.0", "oracle value printed");
  expect_contains(r, "\"mean\":", "mc mean printed");

  r = run("mc --ensemble so --N 3 --k1 0 --k2 1 --n1 0 --n2 0 --samples 2000 --seed 7 --oracle");
  expect(r.exit_code == 4, "oracle beyond N=2 exits 4");

  r = run("mc --ensemble so --N 2 --k1 0 --k2 1 --n1 1 --n2 0 --samples 2000 --seed 7");
  expect(r.exit_code == 1, "n1 > n2 exits 1");

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cout << "cli_tests: " << failures << " failures\n";
  return 1;
}
