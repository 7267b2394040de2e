// //////////////////////////////////////////////////////////////////////////
// Implementation file Timer.cpp for class Timer
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/04/19
// //////////////////////////////////////////////////////////////////////////

#include "Timer.h"


Timer::Timer()
    : m_beginTime( 0 )
    , m_elapsedTime( 0.0 )
{
}


Timer::~Timer()
{
}


void
Timer::start()
{
  m_beginTime = std::clock();
}


void
Timer::finish()
{
  std::clock_t endTime = std::clock();
  m_elapsedTime = double( endTime - m_beginTime ) / CLOCKS_PER_SEC;
}


double
Timer::elapsedTime() const
{
  return m_elapsedTime;
}
