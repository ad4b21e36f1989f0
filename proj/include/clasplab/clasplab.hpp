#pragma once

#include "clasplab/clasps.hpp"
#include "clasplab/diagram.hpp"
#include "clasplab/diagram_io.hpp"
#include "clasplab/error.hpp"
#include "clasplab/fillability.hpp"
#include "clasplab/generators.hpp"
#include "clasplab/move_io.hpp"
#include "clasplab/moves.hpp"
#include "clasplab/render.hpp"
#include "clasplab/rulings.hpp"
