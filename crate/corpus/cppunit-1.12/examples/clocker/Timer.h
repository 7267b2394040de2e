// //////////////////////////////////////////////////////////////////////////
// Header file Timer.h for class Timer
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/04/19
// //////////////////////////////////////////////////////////////////////////
#ifndef TIMER_H
#define TIMER_H

#include <ctime>


/// A Timer.
class Timer
{
public:
  /*! Constructs a Timer object.
   */
  Timer();

  /// Destructor.
  virtual ~Timer();

  void start();
  void finish();

  double elapsedTime() const;

private:
  std::clock_t m_beginTime;
  double m_elapsedTime;
};



#endif  // TIMER_H
