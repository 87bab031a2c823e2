#pragma once

#include "toyscatter/hypervolume.hpp"
#include "toyscatter/instance.hpp"
#include "toyscatter/montecarlo.hpp"
#include "toyscatter/rational.hpp"
#include "toyscatter/recursive.hpp"
#include "toyscatter/relations.hpp"
#include "toyscatter/report_json.hpp"
#include "toyscatter/residue.hpp"
#include "toyscatter/rng.hpp"
#include "toyscatter/series.hpp"
