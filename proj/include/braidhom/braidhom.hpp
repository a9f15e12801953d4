/**
 * @file braidhom.hpp
 * @brief Umbrella header for the braidhom library.
 */
#pragma once

#include "braidhom/field.hpp"
#include "braidhom/shuffles.hpp"
#include "braidhom/linalg.hpp"
#include "braidhom/spaces.hpp"
#include "braidhom/shuffle_algebra.hpp"
#include "braidhom/complexes.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/oracle.hpp"
#include "braidhom/io.hpp"
