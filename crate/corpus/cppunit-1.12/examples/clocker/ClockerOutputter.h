// //////////////////////////////////////////////////////////////////////////
// Header file ClockerOutputter.h for class ClockerOutputter
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/06/14
// //////////////////////////////////////////////////////////////////////////
#ifndef CLOCKEROUTPUTTER_H
#define CLOCKEROUTPUTTER_H

#include <cppunit/Outputter.h>
#include <iostream>

class ClockerModel;


/// Prints the timing collected by a ClockerModel after the test run.
class ClockerOutputter : public CppUnit::Outputter
{
public:
  ClockerOutputter( ClockerModel *model,
                    std::ostream &stream );

  /// Destructor.
  virtual ~ClockerOutputter();

  void write();

private:
  void printTestTimes();
  void printStatistics();

  /// Prevents the use of the copy constructor.
  ClockerOutputter( const ClockerOutputter &other );

  /// Prevents the use of the copy operator.
  void operator =( const ClockerOutputter &other );

private:
  ClockerModel *m_model;
  std::ostream &m_stream;
};



#endif  // CLOCKEROUTPUTTER_H
