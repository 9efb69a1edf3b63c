#pragma once

#include "wpsinv/basket_solver.hpp"
#include "wpsinv/catalog.hpp"
#include "wpsinv/checker.hpp"
#include "wpsinv/core.hpp"
#include "wpsinv/errors.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/json_io.hpp"
#include "wpsinv/moduli.hpp"
#include "wpsinv/noether.hpp"
#include "wpsinv/rational.hpp"
#include "wpsinv/reid_rr.hpp"
