// //////////////////////////////////////////////////////////////////////////
// Implementation file ClockerModel.cpp for class ClockerModel
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/06/14
// //////////////////////////////////////////////////////////////////////////

#include "ClockerModel.h"
#include <cstdio>


ClockerModel::ClockerModel()
    : m_totalTestCaseTime( 0 )
    , m_testCaseCount( 0 )
{
}


ClockerModel::~ClockerModel()
{
}


void
ClockerModel::setExpectedTestCount( int count )
{
  m_tests.resize( count );
}


void
ClockerModel::enterTest( CppUnit::Test *test,
                         bool isSuite )
{
  TestInfo info;
  info.m_name = test->getName();
  info.m_isSuite = isSuite;
  info.m_timer.start();
  m_currentIndexes.push_back( m_tests.size() );
  m_tests.push_back( info );

  if ( !isSuite )
    ++m_testCaseCount;
}


void
ClockerModel::exitTest( CppUnit::Test *test,
                        bool isSuite )
{
  TestInfo &info = m_tests[ m_currentIndexes.back() ];
  info.m_timer.finish();
  m_currentIndexes.pop_back();

  if ( !isSuite )
    m_totalTestCaseTime += info.m_timer.elapsedTime();
}


double
ClockerModel::totalElapsedTime() const
{
  return m_totalTestCaseTime;
}


double
ClockerModel::averageTestCaseTime() const
{
  double average = 0;
  if ( m_testCaseCount > 0 )
    average = m_totalTestCaseTime / m_testCaseCount;
  return average;
}


double
ClockerModel::testTimeFor( int testIndex ) const
{
  const TestInfo &info = m_tests[ testIndex ];
  return info.m_timer.elapsedTime();
}


std::string
ClockerModel::testNameFor( int testIndex ) const
{
  return m_tests[ testIndex ].m_name;
}


int
ClockerModel::testCount() const
{
  return m_tests.size();
}


std::string
ClockerModel::timeStringFor( double time )
{
  char buffer[320];
  const char *format;
  if ( time < 1 )
    format = "%2.3f";
  else
    format = "%6.3f";

  std::sprintf( buffer, format, time );

  return buffer;
}
