#pragma once

#include "waveset/rational.hpp"
#include "waveset/interval_set.hpp"
#include "waveset/frequency.hpp"
#include "waveset/piecewise_map.hpp"
#include "waveset/scb.hpp"
#include "waveset/homotopy.hpp"
#include "waveset/gallery.hpp"
#include "waveset/json_io.hpp"
