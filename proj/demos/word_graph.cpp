// Builds the graph of a Fibonacci prefix, checks that it is prime, realizes it
// as a permutation graph and prints the smallest members of its age.

#include <iostream>

#include "primeage/primeage.hpp"

int main() {
  using namespace primeage;

  const Word fib = Word::fibonacci();
  const std::size_t length = 12;
  const std::string prefix = fib.prefix(length);
  const Graph g = graph_of_word(fib, length);

  std::cout << "prefix      " << prefix << '\n';
  std::cout << "graph6      " << graph6::encode(g) << "  (" << g.n() << " vertices, " << g.edge_count()
            << " edges)\n";
  std::cout << "prime       " << (is_prime(g) ? "yes" : "no") << '\n';

  const Realizer r = build_realizer(prefix);
  std::cout << "permutation " << one_line(bichain_to_permutation(r)) << "  valid="
            << (validate_realizer(r, g) ? "yes" : "no") << '\n';

  const AgeApprox age = age_enumerate(fib, 60, 5);
  std::cout << "age sizes  ";
  for (const auto& level : age.levels) std::cout << ' ' << level.size();
  std::cout << '\n';

  for (const auto& cert : bounds_enumerate(fib, 40, 4))
    std::cout << "bound       " << graph6::encode(cert.graph) << " on " << cert.graph.n() << " vertices\n";

  std::cout << to_dot(graph_of_word(fib, 4), "fib4");
}
