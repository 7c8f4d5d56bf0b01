"""Streamlit界面模块"""
