#pragma once

#include "gaingraph/document.hpp"
#include "gaingraph/gain.hpp"
#include "gaingraph/graph.hpp"
#include "gaingraph/line_graph.hpp"
#include "gaingraph/matrix.hpp"
#include "gaingraph/orientation.hpp"
#include "gaingraph/random.hpp"
#include "gaingraph/spectra.hpp"
#include "gaingraph/verify.hpp"
