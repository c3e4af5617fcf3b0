// Benchmark of the OpenMP kernels against their serial reference paths.
// Each kernel runs both ways on the same inputs; outputs must agree
// exactly, and the table reports wall times and speedup.

#include <chrono>
#include <cstdio>
#include <functional>

#include "localmds/fo.hpp"
#include "localmds/generators.hpp"
#include "localmds/local_sim.hpp"
#include "localmds/mds.hpp"
#include "localmds/mds_programs.hpp"
#include "localmds/minor.hpp"

using namespace localmds;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx %s\n", name, serial, parallel,
              serial / parallel, equal ? "outputs-equal" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

  {
    Graph g = gen::grid(60, 60).graph;
    VertexSet a, b;
    double ts = seconds([&] { a = mds::phase1(g, Rat(3), Exec::Serial); });
    double tp = seconds([&] { b = mds::phase1(g, Rat(3), Exec::Parallel); });
    row("phase1 grid 60x60", ts, tp, a == b);

    VertexSet pa, pb;
    double ps = seconds([&] { pa = mds::phase2(g, a, Exec::Serial); });
    double pp = seconds([&] { pb = mds::phase2(g, a, Exec::Parallel); });
    row("phase2 grid 60x60", ps, pp, pa == pb);
  }

  {
    Graph g = gen::random_planar(4000, 7).graph;
    VertexSet a, b;
    double ts = seconds([&] { a = mds::phase1(g, Rat(3), Exec::Serial); });
    double tp = seconds([&] { b = mds::phase1(g, Rat(3), Exec::Parallel); });
    row("phase1 random-planar 4000", ts, tp, a == b);
  }

  {
    Graph g = gen::grid(40, 40).graph;
    sim::RunOptions ser, par;
    ser.exec = Exec::Serial;
    par.exec = Exec::Parallel;
    sim::RunTranscript<Graph> a, b;
    double ts = seconds(
        [&] { a = sim::run(g, sim::gather_ball_program(2), 10, ser); });
    double tp = seconds(
        [&] { b = sim::run(g, sim::gather_ball_program(2), 10, par); });
    row("round engine gather-2 40x40", ts, tp, a.outputs == b.outputs);
  }

  {
    Graph g = gen::grid(18, 18).graph;
    mds::MdsResult a, b;
    double ts =
        seconds([&] { a = mds::simulate_modified_lenzen(g, Rat(3), Exec::Serial); });
    double tp = seconds(
        [&] { b = mds::simulate_modified_lenzen(g, Rat(3), Exec::Parallel); });
    row("simulated lenzen grid 18x18", ts, tp,
        a.dominating_set == b.dominating_set);
  }

  {
    Graph g = gen::torus_grid(4, 6).graph;
    std::map<VertexId, Graph> a, b;
    double ts =
        seconds([&] { a = minor::canonical_k33_all(g, 60, Exec::Serial); });
    double tp =
        seconds([&] { b = minor::canonical_k33_all(g, 60, Exec::Parallel); });
    row("canonical K33 scan torus 4x6", ts, tp, a == b);
  }

  return 0;
}
