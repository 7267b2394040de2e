// //////////////////////////////////////////////////////////////////////////
// Implementation file ClockerOutputter.cpp for class ClockerOutputter
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/06/14
// //////////////////////////////////////////////////////////////////////////
#include "ClockerModel.h"
#include "ClockerOutputter.h"


ClockerOutputter::ClockerOutputter( ClockerModel *model,
                                    std::ostream &stream )
    : m_model( model )
    , m_stream( stream )
{
}


ClockerOutputter::~ClockerOutputter()
{
}


void
ClockerOutputter::write()
{
  m_stream << "Test timing:\n";
  printTestTimes();
  m_stream << "\n";
  printStatistics();
}


void
ClockerOutputter::printTestTimes()
{
  for ( int index = 0; index < m_model->testCount(); ++index )
  {
    m_stream << m_model->testNameFor( index ) << " : "
             << ClockerModel::timeStringFor( m_model->testTimeFor( index ) )
             << "\n";
  }
}


void
ClockerOutputter::printStatistics()
{
  m_stream << "Total elapsed time: "
           << ClockerModel::timeStringFor( m_model->totalElapsedTime() )
           << ", average test case time: "
           << ClockerModel::timeStringFor( m_model->averageTestCaseTime() )
           << "\n";
}
