# init_db.py
from database.db_session import init_db

if __name__ == "__main__":
    init_db()
    print("DB tables created")
