#pragma once

#include "fields.hpp"
#include "matrix.hpp"
#include "report.hpp"
#include "algebra.hpp"
#include "datum.hpp"
#include "smash.hpp"
#include "integrals.hpp"
#include "maschke.hpp"
#include "gallery.hpp"
