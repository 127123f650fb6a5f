#pragma once

#include "framecraft/bracket.hpp"
#include "framecraft/builtin_groups.hpp"
#include "framecraft/constructors.hpp"
#include "framecraft/error.hpp"
#include "framecraft/frame_engine.hpp"
#include "framecraft/frame_report.hpp"
#include "framecraft/group.hpp"
#include "framecraft/harmonic.hpp"
#include "framecraft/linalg.hpp"
#include "framecraft/multigen.hpp"
#include "framecraft/representation.hpp"
#include "framecraft/tolerances.hpp"
#include "framecraft/zak.hpp"
