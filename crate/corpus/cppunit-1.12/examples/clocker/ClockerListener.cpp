// //////////////////////////////////////////////////////////////////////////
// Implementation file ClockerListener.cpp for class ClockerListener
// (c)Copyright 2000, Baptiste Lepilleur.
// Created: 2002/04/19
// //////////////////////////////////////////////////////////////////////////
#include <cppunit/Test.h>
#include <iostream>
#include "ClockerListener.h"
#include "ClockerModel.h"


ClockerListener::ClockerListener( ClockerModel *model,
                                  bool text )
    : m_model( model )
    , m_text( text )
{
}


ClockerListener::~ClockerListener()
{
}


void
ClockerListener::startTestRun( CppUnit::Test *test,
                               CppUnit::TestResult *eventManager )
{
  m_model->setExpectedTestCount( test->countTestCases() *2 );
}


void
ClockerListener::endTestRun( CppUnit::Test *test,
                             CppUnit::TestResult *eventManager )
{
  if ( m_text )
    std::cout << "\n" << m_model->testCount() << " timed tests\n";
}


void
ClockerListener::startTest( CppUnit::Test *test )
{
  m_model->enterTest( test, false );
}


void
ClockerListener::endTest( CppUnit::Test *test )
{
  m_model->exitTest( test, false );
}


void
ClockerListener::startSuite( CppUnit::Test *suite )
{
  m_model->enterTest( suite, true );
}


void
ClockerListener::endSuite( CppUnit::Test *suite )
{
  m_model->exitTest( suite, true );
}
