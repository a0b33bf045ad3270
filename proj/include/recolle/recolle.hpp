#pragma once

#include "category.hpp"
#include "comparison.hpp"
#include "examples.hpp"
#include "functor.hpp"
#include "gf2.hpp"
#include "homological.hpp"
#include "mv.hpp"
#include "quiver.hpp"
#include "quivers.hpp"
#include "recollement.hpp"
#include "rep.hpp"
#include "report.hpp"
#include "suites.hpp"
