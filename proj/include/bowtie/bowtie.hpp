#pragma once

// Umbrella header: the whole library.

#include "bowtie/bowtie_graph.hpp"
#include "bowtie/colouring.hpp"
#include "bowtie/components.hpp"
#include "bowtie/core.hpp"
#include "bowtie/experiment.hpp"
#include "bowtie/extraction.hpp"
#include "bowtie/generators.hpp"
#include "bowtie/io.hpp"
#include "bowtie/oracle.hpp"
#include "bowtie/rng.hpp"
