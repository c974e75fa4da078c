#pragma once

#include "specrep/partitions.hpp"
#include "specrep/lr.hpp"
#include "specrep/cyclotomic.hpp"
#include "specrep/characters.hpp"
#include "specrep/spectrum.hpp"
#include "specrep/classifier.hpp"
