#pragma once

#include "primeage/ages.hpp"
#include "primeage/canon.hpp"
#include "primeage/catalogue.hpp"
#include "primeage/embed.hpp"
#include "primeage/generate.hpp"
#include "primeage/graph.hpp"
#include "primeage/graph_io.hpp"
#include "primeage/prime.hpp"
#include "primeage/realizers.hpp"
#include "primeage/serialize.hpp"
#include "primeage/verify.hpp"
#include "primeage/word_graphs.hpp"
#include "primeage/words.hpp"
