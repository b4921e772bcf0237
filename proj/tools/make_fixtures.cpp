// Writes the reference rings, solutions and zero sets into a data directory.
#include <filesystem>
#include <iostream>

#include "fusioninv/fixtures.hpp"
#include "fusioninv/io.hpp"

using namespace fusioninv;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("data");
  fs::create_directories(dir);
  set_working_precision(50);

  auto write = [&](const std::string& name, const io::Json& j) {
    io::write_file(dir / name, io::dump(j));
    std::cout << (dir / name).string() << "\n";
  };

  const auto trivial = FusionSystem::create(fixtures::trivial_ring());
  const auto fib = FusionSystem::create(fixtures::fibonacci_ring());
  const auto z3 = FusionSystem::create(fixtures::z3_ring());
  const auto repds3 = FusionSystem::create(fixtures::repds3_ring());

  write("trivial.ring.json", io::to_json(trivial->ring()));
  write("fibonacci.ring.json", io::to_json(fib->ring()));
  write("z3.ring.json", io::to_json(z3->ring()));
  write("repds3.ring.json", io::to_json(repds3->ring()));

  write("trivial.sol.json", io::to_json(fixtures::all_ones(trivial, "trivial")));
  write("fibonacci.sol.json", io::to_json(fixtures::fibonacci_solution(fib)));
  write("yang-lee.sol.json", io::to_json(fixtures::yang_lee_solution(fib)));
  Solution gauged = apply_gauge(fixtures::fibonacci_solution(fib), sample_normalized_gauge(*fib, 7));
  gauged.name = "fibonacci-gauged";
  gauged.note = "Fibonacci point moved by the normalized gauge with seed 7";
  write("fibonacci-gauged.sol.json", io::to_json(gauged));
  for (int k = 0; k < 3; ++k)
    write("z3-cocycle-" + std::to_string(k) + ".sol.json", io::to_json(fixtures::z3_cocycle(z3, k)));

  for (int p = 1; p <= 3; ++p)
    write("repds3-pattern-" + std::to_string(p) + ".zeros.json",
          io::to_json(*repds3, fixtures::repds3_pattern(*repds3, p)));
  return 0;
}
